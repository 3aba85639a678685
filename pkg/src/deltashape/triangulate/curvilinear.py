"""Projection of a rectilinear mesh to a curvilinear one, one edge at a time."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.spatial import ConvexHull

from ..bspline import BSplineCurve, sample_curve
from .delaunay import Mesh

__all__ = ["CurvedMesh", "curvilinear", "edge_control_indices", "hull_containment"]


@dataclass(frozen=True, eq=False)
class CurvedMesh:
    base: Mesh
    edge_splines: dict

    def to_dict(self) -> dict:
        out = self.base.to_dict()
        out["splines"] = {f"{a}-{b}": c.to_dict() for (a, b), c in sorted(self.edge_splines.items())}
        return out

    @classmethod
    def from_dict(cls, data) -> "CurvedMesh":
        base = Mesh.from_dict(data)
        splines = {}
        for key, cj in data["splines"].items():
            a, b = (int(s) for s in key.split("-"))
            splines[(a, b)] = BSplineCurve.from_dict(cj)
        return cls(base, splines)


def edge_control_indices(mesh: Mesh, edge: tuple[int, int]) -> list[int]:
    """Control polygon of an edge: first endpoint, opposite vertices by id, second endpoint."""
    a, b = edge
    return [a, *mesh.opposite_vertices(edge), b]


def _edge_weights(w, n_control: int, endpoint_weight: float) -> np.ndarray:
    if np.ndim(w) == 0 or len(w) == 1:
        inner = float(np.ravel(w)[0])
        return np.array([endpoint_weight] + [inner] * (n_control - 2) + [endpoint_weight])
    w = np.asarray(w, dtype=float)
    if len(w) != n_control:
        raise ValueError(f"weight vector of length {len(w)} for an edge with {n_control} control points")
    return w


def curvilinear(
    mesh: Mesh,
    w: float | Sequence[float] = 1.0,
    degree: int | None = None,
    endpoint_weight: float = 1.0,
) -> CurvedMesh:
    """Replace every mesh edge by a clamped B-spline.

    The opposite vertex of each adjacent triangle becomes an interior
    control point, giving 3 control points on boundary edges and 4 on
    shared ones.  With ``degree=None`` the spline degree is the number of
    control points minus one; an explicit degree is capped at that value.
    A scalar ``w`` weights the interior control points while endpoints get
    ``endpoint_weight``; a full vector sets every weight of an edge.
    """
    if degree is not None and degree < 2:
        raise ValueError("spline degree must be at least 2")
    splines = {}
    pts = mesh.points
    for edge in mesh.edges:
        idx = edge_control_indices(mesh, edge)
        p = len(idx) - 1 if degree is None else min(degree, len(idx) - 1)
        weights = _edge_weights(w, len(idx), endpoint_weight)
        splines[edge] = BSplineCurve.clamped(pts[idx], p, weights)
    return CurvedMesh(mesh, splines)


def hull_containment(cm: CurvedMesh, samples_per_edge: int = 32, tol: float = 1e-6) -> tuple[bool, float]:
    """Check that every sampled spline point lies in the convex hull of the mesh vertices.

    Returns ``(ok, worst)`` where ``worst`` is the largest half-plane
    violation over all samples: positive means outside the hull by that
    many pixels, negative is the depth of the shallowest sample inside.
    """
    if samples_per_edge < 2:
        raise ValueError("need at least two samples per edge")
    hull = ConvexHull(cm.base.points)
    normals = hull.equations[:, :2]
    offsets = hull.equations[:, 2]
    samples = np.vstack([sample_curve(c, samples_per_edge) for c in cm.edge_splines.values()])
    signed = samples @ normals.T + offsets
    worst = float(np.max(np.max(signed, axis=1)))
    return worst <= tol, worst
