"""
Proximity relations between cell sets.

``strong_near``      non-empty intersection
``graded_strong_near``  dimension of the intersection complex
``lodato_near``      intersection, or geometric distance within a tolerance
``descriptive_near`` some pair of cells with matching feature vectors

Regions are sets of cells, optionally carrying a planar realization (a
shapely geometry) for geometric queries.  Combinatorial intersection means
a shared vertex unless ``mode="cell"`` asks for a shared cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

import numpy as np
from scipy import ndimage
from scipy.spatial.distance import cdist
from shapely.geometry import MultiPoint, Polygon
from shapely.ops import unary_union

from .complex import Cell, Complex
from .errors import ConfigurationError, ExtractionError

__all__ = [
    "Region",
    "FeatureVector",
    "ShapeRegion",
    "TriangleFeatures",
    "combinatorial_features",
    "closure",
    "intersection_complex",
    "strong_near",
    "graded_strong_near",
    "lodato_near",
    "descriptive_near",
]


def closure(cells: Iterable[Cell]) -> frozenset[Cell]:
    """All faces of all cells, built from vertex lists."""
    out: set[Cell] = set()
    for c in cells:
        vs = tuple(sorted(set(c.vertices)))
        for r in range(1, len(vs) + 1):
            out.update(Cell(sub) for sub in combinations(vs, r))
    return frozenset(out)


@dataclass(frozen=True, eq=False)
class Region:
    cells: frozenset[Cell]
    geometry: object = None

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(self.cells))

    @classmethod
    def from_cells(cls, cells: Iterable[Cell], points: np.ndarray | None = None) -> "Region":
        """Region over ``cells``; with vertex ``points`` it also gets a planar realization."""
        cells = frozenset(cells)
        if points is None:
            return cls(cells)
        parts = []
        for c in cells:
            xy = np.asarray(points)[list(c.vertices)]
            if c.dim == 2:
                parts.append(Polygon(xy))
            else:
                parts.append(MultiPoint(xy).convex_hull)
        return cls(cells, unary_union(parts) if parts else None)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for c in self.cells for v in c.vertices)

    @property
    def closure(self) -> frozenset[Cell]:
        return closure(self.cells)

    def __len__(self):
        return len(self.cells)


def _region(x) -> Region:
    region = x if isinstance(x, Region) else Region(frozenset(x))
    if not region.cells:
        raise ValueError("proximity relations need non-empty regions")
    return region


@dataclass(frozen=True, eq=False)
class FeatureVector:
    components: np.ndarray
    schema: tuple[str, ...] = ()

    def __post_init__(self):
        v = np.asarray(self.components, dtype=float).reshape(-1)
        if not np.all(np.isfinite(v)):
            raise ValueError("feature vectors must be finite")
        if self.schema and len(self.schema) != len(v):
            raise ValueError("schema length does not match the number of components")
        object.__setattr__(self, "components", v)

    def close_to(self, other: "FeatureVector", eps: float = 0.0) -> bool:
        return bool(np.max(np.abs(self.components - other.components)) <= eps)


@dataclass(frozen=True, eq=False)
class ShapeRegion:
    """Shape with disjoint interior and boundary cell sets."""

    interior: frozenset[Cell]
    boundary: frozenset[Cell]

    def __post_init__(self):
        if not self.interior:
            raise ValueError("a shape needs a non-empty interior")
        if self.interior & self.boundary:
            raise ValueError("interior and boundary must be disjoint")

    @property
    def closure(self) -> frozenset[Cell]:
        return self.interior | self.boundary

    @classmethod
    def from_triangles(cls, triangles: Iterable[Cell]) -> "ShapeRegion":
        """Shape covered by ``triangles``: its boundary is every edge lying on
        exactly one of them, with the endpoints; the rest of the closure is interior."""
        triangles = list(triangles)
        count: dict[Cell, int] = {}
        for t in triangles:
            a, b, c = sorted(t.vertices)
            for e in ((a, b), (a, c), (b, c)):
                count[Cell(e)] = count.get(Cell(e), 0) + 1
        bdy = set()
        for e, n in count.items():
            if n == 1:
                bdy.add(e)
                bdy.update(Cell((v,)) for v in e.vertices)
        cl = closure(triangles)
        return cls(cl - bdy, frozenset(bdy))

    @classmethod
    def from_mask(cls, mesh, mask: np.ndarray, samples: int = 6) -> "ShapeRegion":
        """Triangles of ``mesh`` whose sampled points all fall on true pixels of ``mask``."""
        mask = np.asarray(mask, dtype=bool)
        h, w = mask.shape
        bary = _barycentric_grid(samples)
        inside = []
        for t in mesh.triangles:
            xy = bary @ mesh.points[list(t)]
            cols = np.clip(np.rint(xy[:, 0]).astype(int), 0, w - 1)
            rows = np.clip(np.rint(xy[:, 1]).astype(int), 0, h - 1)
            if mask[rows, cols].all():
                inside.append(Cell(t))
        return cls.from_triangles(inside)


def _barycentric_grid(n: int) -> np.ndarray:
    return np.array([(i, j, n - i - j) for i in range(n + 1) for j in range(n + 1 - i)], dtype=float) / n


def strong_near(A, B, mode: str = "vertex") -> bool:
    """``A`` and ``B`` intersect: share a vertex, a cell (``mode="cell"``), or a point."""
    A, B = _region(A), _region(B)
    if mode == "vertex":
        return not A.vertices.isdisjoint(B.vertices)
    if mode == "cell":
        return not A.cells.isdisjoint(B.cells)
    if mode == "geometric":
        if A.geometry is None or B.geometry is None:
            raise ConfigurationError("geometric mode needs realized regions")
        return bool(A.geometry.intersects(B.geometry))
    raise ValueError(f"unknown intersection mode {mode!r}")


def intersection_complex(A, B) -> frozenset[Cell]:
    return _region(A).closure & _region(B).closure


def graded_strong_near(A, B) -> int | None:
    """Dimension of the intersection complex, or ``None`` when disjoint."""
    common = intersection_complex(A, B)
    if not common:
        return None
    return max(c.dim for c in common)


def lodato_near(A, B, eps_geo: float | None = None) -> bool:
    """Intersecting regions are near; with ``eps_geo`` so are realizations within that distance."""
    A, B = _region(A), _region(B)
    if eps_geo is not None and (A.geometry is None or B.geometry is None):
        raise ConfigurationError("eps_geo needs realized regions")
    if strong_near(A, B):
        return True
    if eps_geo is None:
        return False
    return bool(A.geometry.distance(B.geometry) <= eps_geo)


def _features(phi, cell) -> np.ndarray:
    v = phi(cell)
    return v.components if isinstance(v, FeatureVector) else np.asarray(v, dtype=float).reshape(-1)


def descriptive_near(A, B, phi: Callable, eps: float = 0.0, over_closure: bool = True) -> bool:
    """Some cell of ``A`` and some cell of ``B`` have features within ``eps`` (sup norm).

    With ``over_closure`` the faces of the cells take part as well, so
    regions sharing only a vertex are descriptively near.
    """
    A, B = _region(A), _region(B)
    ca = sorted(A.closure if over_closure else A.cells, key=Cell.sort_key)
    cb = sorted(B.closure if over_closure else B.cells, key=Cell.sort_key)
    fa = np.array([_features(phi, c) for c in ca])
    fb = np.array([_features(phi, c) for c in cb])
    return bool(cdist(fa, fb, metric="chebyshev").min() <= eps)


class TriangleFeatures:
    """Per-cell descriptor over an image and a mesh.

    Components, each scaled to [0, 1] for the image: mean intensity, mean
    Sobel magnitude relative to the image maximum, area relative to the
    image area, centroid column and row.  Vertices and edges are sampled
    at their points, triangles on a barycentric grid; bilinear interpolation
    throughout.
    """

    schema = ("intensity", "gradient", "area", "centroid_x", "centroid_y")

    def __init__(self, image: np.ndarray, points: np.ndarray, samples: int = 6):
        from .triangulate.keypoints import gradient_magnitude

        self.image = np.asarray(image, dtype=float)
        self.points = np.asarray(points, dtype=float)
        grad = gradient_magnitude(self.image)
        peak = grad.max()
        self.gradient = grad / peak if peak > 0 else grad
        self._tri = _barycentric_grid(samples)
        self._seg = np.linspace(0.0, 1.0, samples + 1)

    def _sample(self, field_: np.ndarray, xy: np.ndarray) -> float:
        return float(ndimage.map_coordinates(field_, [xy[:, 1], xy[:, 0]], order=1, mode="nearest").mean())

    def __call__(self, cell: Cell) -> FeatureVector:
        h, w = self.image.shape
        try:
            P = self.points[list(cell.vertices)]
        except IndexError:
            raise ExtractionError(f"{cell!r} references a vertex without coordinates") from None
        if np.any(P < -1e-9) or np.any(P[:, 0] > w - 1 + 1e-9) or np.any(P[:, 1] > h - 1 + 1e-9):
            raise ExtractionError(f"{cell!r} lies outside the image")
        if cell.dim == 2:
            xy = self._tri @ P
            area = 0.5 * abs((P[1, 0] - P[0, 0]) * (P[2, 1] - P[0, 1]) - (P[1, 1] - P[0, 1]) * (P[2, 0] - P[0, 0]))
        elif cell.dim == 1:
            xy = P[0] + self._seg[:, None] * (P[1] - P[0])
            area = 0.0
        else:
            xy = P
            area = 0.0
        cx, cy = P.mean(axis=0)
        comps = [
            self._sample(self.image, xy),
            self._sample(self.gradient, xy),
            area / (h * w),
            cx / max(w - 1, 1),
            cy / max(h - 1, 1),
        ]
        return FeatureVector(np.array(comps), self.schema)


def combinatorial_features(K: Complex) -> Callable[[Cell], FeatureVector]:
    """Image-free descriptor: cell dimension and mean vertex degree in ``K``."""
    degree: dict[int, int] = {}
    for e in K.X1:
        for v in set(e.vertices):
            degree[v] = degree.get(v, 0) + 1

    def phi(cell: Cell) -> FeatureVector:
        vs = cell.vertices
        return FeatureVector(np.array([cell.dim, sum(degree.get(v, 0) for v in vs) / len(vs)]), ("dim", "degree"))

    return phi
