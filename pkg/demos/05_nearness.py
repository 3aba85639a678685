"""
Nearness between spoke complexes.

Consecutive spoke levels always meet, so they are strongly near; strong
nearness in turn implies Lodato and descriptive nearness.  The theorem
suite checks these implications on random meshes and reports any
counterexample instead of raising.
"""

import numpy as np

from deltashape import (
    Cell,
    Region,
    delaunay,
    descriptive_near,
    graded_strong_near,
    lodato_near,
    spoke_decomposition,
    strong_near,
    theorem_suite,
)
from deltashape.proximity import combinatorial_features

rng = np.random.default_rng(2)
mesh = delaunay(rng.uniform(0, 100, size=(25, 2)))
K = mesh.to_complex()
dec = spoke_decomposition(K, 0)
phi = combinatorial_features(K)
for j in range(1, dec.depth):
    a, b = dec.levels[j + 1], dec.levels[j]
    print(
        f"levels {j + 1}/{j}: strong {strong_near(a, b)}, graded {graded_strong_near(a, b)}, "
        f"Lodato {lodato_near(a, b)}, descriptive {descriptive_near(a, b, phi)}"
    )

# with coordinates, regions that do not touch can still be Lodato near
pts = np.array([(0, 0), (1, 0), (0, 1), (1.5, 0), (2.5, 0), (1.5, 1)], dtype=float)
A = Region.from_cells([Cell((0, 1, 2))], pts)
B = Region.from_cells([Cell((3, 4, 5))], pts)
print("gap:", A.geometry.distance(B.geometry))
print("Lodato near within 1.0:", lodato_near(A, B, eps_geo=1.0), "| within 0.1:", lodato_near(A, B, eps_geo=0.1))

for report in theorem_suite(K, trials=10, seed=0):
    print(f"{report.theorem}: {report.checks} checks, {report.vacuous} vacuous, {len(report.failures)} failures")
