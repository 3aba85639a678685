"""
From pixels to a rectilinear and a curvilinear mesh.

Keypoints are gradient maxima, so on a white square they sit along its
outline.  The Delaunay mesh is cross-checked against an independent
brute-force enumerator.
"""

import numpy as np

from deltashape import curvilinear, delaunay, detect_keypoints, hull_containment
from deltashape.oracle import compare_with_oracle
from deltashape.synthetic import square_image

img = square_image(64, 16, 48)
kps = detect_keypoints(img, max_count=40, nms_radius=5)
print(f"{len(kps)} keypoints; strongest: {kps[0]}")
xy = np.array([k.xy for k in kps])
print("x range", xy[:, 0].min(), xy[:, 0].max(), "| y range", xy[:, 1].min(), xy[:, 1].max())

mesh = delaunay(kps)
print(f"{len(mesh.triangles)} triangles, {len(mesh.edges)} edges, {len(mesh.boundary_edges)} on the hull")
equal, missing, extra = compare_with_oracle(mesh.points)
print("matches brute force:", equal)

cm = curvilinear(mesh)
degrees = [c.degree for c in cm.edge_splines.values()]
print("spline degrees used:", {d: degrees.count(d) for d in sorted(set(degrees))})
print("containment:", hull_containment(cm))
