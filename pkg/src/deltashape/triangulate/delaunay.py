"""
Delaunay triangulation of keypoints.

A sweep over lexicographically sorted points builds an initial
triangulation using only exact orientation tests; Lawson edge flips with
the perturbed in-circle predicate then turn it into the unique Delaunay
triangulation of the perturbed point set.  Cocircular ties therefore
resolve towards diagonals through the lowest vertex index.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from ..complex import Complex, Kind, build_complex
from ..errors import DegeneracyError
from ..predicates import incircle_perturbed, orient2d
from .keypoints import Keypoint

__all__ = ["Mesh", "delaunay", "edge_key"]


def edge_key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True, eq=False)
class Mesh:
    """Embedded triangulation.

    ``triangles`` are ascending vertex-index triples in sorted order and
    ``edge_adjacency`` maps each ascending edge pair to the indices of the
    one or two triangles containing it.
    """

    vertices: tuple[Keypoint, ...]
    triangles: tuple[tuple[int, int, int], ...]
    edge_adjacency: dict = field(default=None)

    def __post_init__(self):
        tris = tuple(sorted(tuple(sorted(int(v) for v in t)) for t in self.triangles))
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "triangles", tris)
        adj: dict[tuple[int, int], list[int]] = {}
        for ti, (a, b, c) in enumerate(tris):
            for e in ((a, b), (a, c), (b, c)):
                adj.setdefault(e, []).append(ti)
        object.__setattr__(self, "edge_adjacency", {e: tuple(v) for e, v in sorted(adj.items())})

    @cached_property
    def points(self) -> np.ndarray:
        pts = np.array([v.xy for v in self.vertices], dtype=float).reshape(-1, 2)
        pts.setflags(write=False)
        return pts

    @property
    def edges(self) -> list[tuple[int, int]]:
        return list(self.edge_adjacency)

    @property
    def boundary_edges(self) -> list[tuple[int, int]]:
        return [e for e, ts in self.edge_adjacency.items() if len(ts) == 1]

    def opposite_vertices(self, edge: tuple[int, int]) -> list[int]:
        a, b = edge_key(*edge)
        return sorted(next(v for v in self.triangles[t] if v not in (a, b)) for t in self.edge_adjacency[(a, b)])

    def triangle_points(self, t: int | Sequence[int]) -> np.ndarray:
        idx = self.triangles[t] if isinstance(t, (int, np.integer)) else tuple(t)
        return self.points[list(idx)]

    def to_complex(self) -> Complex:
        """Ordered simplicial complex on vertex indices; isolated vertices kept."""
        cells: list = [t for t in self.triangles]
        cells += [(i,) for i in range(len(self.vertices))]
        return build_complex(cells, Kind.ORDERED)

    def to_dict(self) -> dict:
        return {
            "vertices": [[v.x, v.y, v.score] for v in self.vertices],
            "triangles": [list(t) for t in self.triangles],
        }

    @classmethod
    def from_dict(cls, data) -> "Mesh":
        verts = [Keypoint(float(x), float(y), float(s)) for x, y, s in data["vertices"]]
        return cls(tuple(verts), tuple(tuple(t) for t in data["triangles"]))


def _as_keypoints(points) -> list[Keypoint]:
    out = []
    for p in points:
        if isinstance(p, Keypoint):
            out.append(p)
        else:
            p = tuple(p)
            out.append(Keypoint(float(p[0]), float(p[1]), float(p[2]) if len(p) > 2 else 0.0))
    return out


def _dedupe(kps: list[Keypoint]) -> list[Keypoint]:
    seen: set[tuple[float, float]] = set()
    out = []
    for k in kps:
        if k.xy in seen:
            continue
        seen.add(k.xy)
        out.append(k)
    if len(out) < len(kps):
        warnings.warn(f"dropped {len(kps) - len(out)} duplicate point(s)", stacklevel=3)
    return out


def _sweep(pts: list[tuple[float, float]]) -> set[tuple[int, int, int]]:
    order = sorted(range(len(pts)), key=lambda i: pts[i])
    k = 2
    while k < len(order) and orient2d(pts[order[0]], pts[order[1]], pts[order[k]]) == 0:
        k += 1
    if k == len(order):
        raise DegeneracyError("all points are collinear")
    apex = order[k]
    tris = {tuple(sorted((order[i], order[i + 1], apex))) for i in range(k - 1)}
    line = order[:k]
    if orient2d(pts[line[0]], pts[line[-1]], pts[apex]) > 0:
        hull = line + [apex]
    else:
        hull = [line[0], apex] + line[:0:-1]

    for q in order[k + 1:]:
        n = len(hull)
        vis = [orient2d(pts[hull[i]], pts[hull[(i + 1) % n]], pts[q]) < 0 for i in range(n)]
        start = next(i for i in range(n) if vis[i] and not vis[i - 1])
        hull = hull[start:] + hull[:start]
        vis = vis[start:] + vis[:start]
        count = 0
        while count < n and vis[count]:
            u, v = hull[count], hull[(count + 1) % n]
            tris.add(tuple(sorted((u, v, q))))
            count += 1
        hull = [hull[0], q] + hull[count:]
    return tris


def _legalize(pts, tris: set[tuple[int, int, int]]) -> set[tuple[int, int, int]]:
    opp: dict[tuple[int, int], set[int]] = {}

    def link(t):
        a, b, c = t
        for e, o in (((a, b), c), ((a, c), b), ((b, c), a)):
            opp.setdefault(e, set()).add(o)

    def unlink(t):
        a, b, c = t
        for e, o in (((a, b), c), ((a, c), b), ((b, c), a)):
            opp[e].discard(o)
            if not opp[e]:
                del opp[e]

    for t in tris:
        link(t)
    stack = sorted(opp)
    while stack:
        e = stack.pop()
        ends = opp.get(e)
        if not ends or len(ends) != 2:
            continue
        a, b = e
        c, d = sorted(ends)
        ia, ib, ic = (a, b, c) if orient2d(pts[a], pts[b], pts[c]) > 0 else (b, a, c)
        if incircle_perturbed(pts, ia, ib, ic, d) <= 0:
            continue
        old1, old2 = tuple(sorted((a, b, c))), tuple(sorted((a, b, d)))
        new1, new2 = tuple(sorted((c, d, a))), tuple(sorted((c, d, b)))
        unlink(old1)
        unlink(old2)
        tris -= {old1, old2}
        tris |= {new1, new2}
        link(new1)
        link(new2)
        stack.extend(edge_key(*x) for x in ((a, c), (a, d), (b, c), (b, d)))
    return tris


def delaunay(points: Iterable) -> Mesh:
    """Delaunay triangulation of ``points`` (keypoints or ``(x, y)`` pairs).

    Vertex indices follow input order after duplicate removal.  Raises
    :class:`DegeneracyError` when fewer than three distinct points remain or
    all of them are collinear.
    """
    kps = _dedupe(_as_keypoints(points))
    if len(kps) < 3:
        raise DegeneracyError("need at least three distinct points")
    pts = [k.xy for k in kps]
    tris = _legalize(pts, _sweep(pts))
    return Mesh(tuple(kps), tuple(tris))
