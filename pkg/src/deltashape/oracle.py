"""
Brute-force Delaunay enumerator used to cross-check :func:`delaunay`.

Every non-collinear triple is kept when no other point lies inside its
circumcircle.  Arithmetic is exact (rationals), and ties are decided on
the lifted paraboloid: point ``i`` is lowered by ``eps**(i + 1)`` and a
point is inside when its lifted image falls below the plane through the
lifted triangle.  This formulation shares no code with
:mod:`deltashape.predicates`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

__all__ = ["brute_force_delaunay", "compare_with_oracle"]


def _inside(P, a: int, b: int, c: int, d: int) -> bool:
    (ax, ay), (bx, by), (cx, cy), (dx, dy) = P[a], P[b], P[c], P[d]
    area = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    # barycentric coordinates of d with respect to a, b, c
    la = ((bx - dx) * (cy - dy) - (by - dy) * (cx - dx)) / area
    lb = ((cx - dx) * (ay - dy) - (cy - dy) * (ax - dx)) / area
    lc = 1 - la - lb

    def z(x, y):
        return x * x + y * y

    gap = la * z(ax, ay) + lb * z(bx, by) + lc * z(cx, cy) - z(dx, dy)
    if gap:
        return gap > 0
    # lowering d raises the gap by delta; lowering a vertex v lowers it by l_v * delta
    coeff = {d: Fraction(1), a: -la, b: -lb, c: -lc}
    for idx in sorted(coeff):
        if coeff[idx]:
            return coeff[idx] > 0
    return False


def brute_force_delaunay(points: Sequence[Sequence[float]]) -> set[tuple[int, int, int]]:
    """Delaunay triangles of distinct ``points`` by exhaustive enumeration, O(n^4)."""
    P = [(Fraction(float(x)), Fraction(float(y))) for x, y, *_ in points]
    out = set()
    n = len(P)
    for a, b, c in combinations(range(n), 3):
        (ax, ay), (bx, by), (cx, cy) = P[a], P[b], P[c]
        if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) == 0:
            continue
        if not any(_inside(P, a, b, c, d) for d in range(n) if d not in (a, b, c)):
            out.add((a, b, c))
    return out


def compare_with_oracle(points) -> tuple[bool, set, set]:
    """Run :func:`delaunay` and the enumerator; returns ``(equal, missing, extra)``."""
    from .triangulate import delaunay

    pts = np.asarray(points, dtype=float)
    mesh = delaunay(pts)
    got = set(mesh.triangles)
    want = brute_force_delaunay(pts)
    return got == want, want - got, got - want
