"""
B-spline edges.

An edge with one adjacent triangle becomes a quadratic with the opposite
vertex as its middle control point; an edge shared by two triangles gets a
cubic with both opposite vertices.  Raising the interior weight pulls the
curve towards those vertices, yet it never leaves the convex hull.
"""

import numpy as np

from deltashape import BSplineCurve, basis_table, continuity_class, curvilinear, delaunay, hull_containment
from deltashape.triangulate import edge_control_indices

mesh = delaunay([(0, 0), (4, -1), (5, 3), (9, 0)])
print("triangles:", mesh.triangles)
for edge in mesh.edges:
    print(f"edge {edge}: control polygon {edge_control_indices(mesh, edge)}")

shared = next(e for e in mesh.edges if len(mesh.edge_adjacency[e]) == 2)
outer = mesh.boundary_edges[0]
for w in (0.2, 1.0, 5.0, 100.0):
    cm = curvilinear(mesh, w=w)
    mids = [np.round(cm.edge_splines[e](0.5), 3).tolist() for e in (shared, outer)]
    ok, worst = hull_containment(cm)
    print(f"w={w:>5}: midpoints shared {mids[0]}, boundary {mids[1]}, inside hull {ok} (worst {worst:.1e})")

# the basis functions behind a clamped cubic add up to one everywhere
curve = BSplineCurve.clamped(np.random.default_rng(0).normal(size=(6, 2)), 3)
t = np.linspace(0, 1, 11)
print("partition of unity error:", float(np.abs(basis_table(curve.knots, 3, t).sum(axis=1) - 1).max()))
print("knots:", curve.knots.knots)
print("continuity at the first interior knot:", continuity_class(curve, 4))
