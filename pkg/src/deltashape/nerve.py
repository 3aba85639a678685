"""
Nerves, k-spokes, spoke complexes and spoke chains around a nucleus vertex.

Spokes are 2-cells.  Two cells intersect when they share a vertex; this is
the only notion of intersection used here, geometry stays in
:mod:`deltashape.proximity`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

from .complex import Cell, Complex
from .errors import ChainError, EmptinessError

__all__ = [
    "SpokeDecomposition",
    "ObjectSpace",
    "nerve",
    "spoke_decomposition",
    "spoke_complex",
    "spoke_chain",
    "max_nerve_cluster",
    "max_nerve_clusters",
    "object_space",
    "vertices_of",
]


def vertices_of(cells: Iterable[Cell]) -> set[int]:
    out: set[int] = set()
    for c in cells:
        out.update(c.vertices)
    return out


def _incidence(K: Complex) -> dict[int, list[Cell]]:
    index: dict[int, list[Cell]] = defaultdict(list)
    for t in K.triangles:
        for v in t.vertex_set:
            index[v].append(t)
    return index


def _check_vertex(K: Complex, p: int) -> None:
    if Cell((p,)) not in K.X0:
        raise KeyError(f"vertex {p} is not in the complex")


@dataclass(frozen=True)
class SpokeDecomposition:
    """Spoke levels around ``nucleus``.

    ``levels[0]`` holds the nucleus as a 0-cell and ``levels[k]`` the
    k-spokes.  The tuple ends at the last non-empty level.
    """

    nucleus: int
    levels: tuple[frozenset[Cell], ...]

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def level_of(self, cell: Cell) -> int | None:
        for k, level in enumerate(self.levels):
            if cell in level:
                return k
        return None

    def to_dict(self) -> dict:
        return {
            "nucleus": self.nucleus,
            "levels": [[list(c.vertices) for c in sorted(lvl, key=Cell.sort_key)] for lvl in self.levels],
        }


@dataclass(frozen=True)
class ObjectSpace:
    """Union of all spoke complexes of positive order around ``nucleus``."""

    nucleus: int
    cells: frozenset[Cell]


def nerve(K: Complex, p: int) -> set[Cell]:
    """All 2-cells of ``K`` that contain vertex ``p``."""
    _check_vertex(K, p)
    return {t for t in K.X2 if p in t.vertex_set}


def spoke_decomposition(K: Complex, p: int) -> SpokeDecomposition:
    """Assign every 2-cell reachable from ``p`` to its spoke level.

    Level ``k`` collects the unassigned 2-cells that share a vertex with some
    cell of level ``k - 1``.  Construction stops at the first empty level.
    """
    _check_vertex(K, p)
    incident = _incidence(K)
    levels = [frozenset({Cell((p,))})]
    assigned: set[Cell] = set()
    frontier = {p}
    while True:
        level = set()
        for v in frontier:
            for t in incident.get(v, ()):
                if t not in assigned:
                    level.add(t)
        if not level:
            break
        assigned |= level
        levels.append(frozenset(level))
        frontier = vertices_of(level)
    return SpokeDecomposition(p, tuple(levels))


def spoke_complex(dec: SpokeDecomposition, k: int) -> set[Cell]:
    if k < 0:
        raise ValueError("spoke order must be non-negative")
    if k > dec.depth:
        return set()
    return set(dec.levels[k])


def spoke_chain(dec: SpokeDecomposition, k: int) -> list[Cell]:
    """Chain ``A_0 .. A_k`` with ``A_j`` a j-spoke and consecutive members intersecting.

    Among all such chains the lexicographically smallest one (comparing
    members by vertex list, from ``A_1`` onwards) is returned.
    """
    if k < 0:
        raise ValueError("chain length must be non-negative")
    if k > dec.depth:
        raise ChainError(f"decomposition has depth {dec.depth}, no chain of length {k}")
    ordered = [sorted(lvl, key=Cell.sort_key) for lvl in dec.levels]
    dead: set[tuple[int, Cell]] = set()

    def extend(j: int, prev: Cell) -> list[Cell] | None:
        if j > k:
            return []
        pv = prev.vertex_set
        for c in ordered[j]:
            if (j, c) in dead or not (pv & c.vertex_set):
                continue
            rest = extend(j + 1, c)
            if rest is not None:
                return [c] + rest
            dead.add((j, c))
        return None

    nucleus = ordered[0][0]
    tail = extend(1, nucleus)
    if tail is None:
        raise ChainError(f"no spoke chain of length {k} around {dec.nucleus}")
    return [nucleus] + tail


def max_nerve_clusters(K: Complex) -> tuple[int, list[int]]:
    """Largest nerve size and every vertex attaining it, ascending."""
    if not K.X2:
        raise EmptinessError("the complex has no 2-cells")
    counts: dict[int, int] = defaultdict(int)
    for t in K.X2:
        for v in t.vertex_set:
            counts[v] += 1
    best = max(counts.values())
    return best, sorted(v for v, n in counts.items() if n == best)


def max_nerve_cluster(K: Complex) -> tuple[int, set[Cell]]:
    """Vertex with the most incident 2-cells (lowest id on ties) and its nerve."""
    _, winners = max_nerve_clusters(K)
    p = winners[0]
    return p, nerve(K, p)


def object_space(K: Complex, p: int) -> ObjectSpace:
    dec = spoke_decomposition(K, p)
    cells = frozenset().union(*dec.levels[1:])
    return ObjectSpace(p, cells)
