"""
Simplicial, ordered simplicial and Delta complexes of dimension at most 2.

A complex stores three graded cell sets ``X0``, ``X1``, ``X2`` together with
an explicit face-map table ``(cell, j) -> cell``.  For simplicial and ordered
complexes the table is derived from vertex lists; for Delta complexes it must
be supplied, because two distinct cells may share a vertex list.

Vertices are non-negative integers and their integer order is the total
order used by ordered complexes.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import ConstructionError, DimensionError, KindViolationError

__all__ = [
    "Kind",
    "Cell",
    "Complex",
    "face",
    "build_complex",
    "sew",
    "glue",
    "as_delta",
    "is_valid",
]

MAX_DIM = 2


class Kind(enum.Enum):
    SIMPLICIAL = "simplicial"
    ORDERED = "ordered"
    DELTA = "delta"


@dataclass(frozen=True)
class Cell:
    """A cell given by its vertex list and an optional identity tag.

    The tag is only meaningful in Delta complexes, where it tells apart
    cells that share a vertex list (parallel edges, glued triangles).
    """

    vertices: tuple[int, ...]
    tag: str | None = None

    def __post_init__(self):
        if not 1 <= len(self.vertices) <= MAX_DIM + 1:
            raise DimensionError(f"cells have 1 to {MAX_DIM + 1} vertices, got {self.vertices}")
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))

    @classmethod
    def of(cls, *vertices: int, tag: str | None = None) -> "Cell":
        return cls(tuple(vertices), tag)

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def sort_key(self):
        return (len(self.vertices), self.vertices, self.tag or "")

    def __repr__(self):
        body = ",".join(map(str, self.vertices))
        return f"Cell({{{body}}}{'' if self.tag is None else ', ' + repr(self.tag)})"


def _coerce(cell) -> Cell:
    if isinstance(cell, Cell):
        return cell
    if isinstance(cell, int):
        return Cell((cell,))
    return Cell(tuple(cell))


def face(cell: Cell | Sequence[int], j: int) -> Cell:
    """Drop the ``j``-th vertex of ``cell``.

    This is the face map of an ordered simplex.  Delta complexes use
    :meth:`Complex.face`, which consults the stored table instead.

    >>> face(Cell.of(0, 1, 2), 0)
    Cell({1,2})
    """
    cell = _coerce(cell)
    if cell.dim < 1:
        raise DimensionError("a 0-cell has no faces")
    if not 0 <= j <= cell.dim:
        raise IndexError(f"face index {j} out of range for a {cell.dim}-cell")
    return Cell(cell.vertices[:j] + cell.vertices[j + 1:])


class Complex:
    """Immutable graded cell complex with explicit face maps.

    Parameters
    ----------
    kind : Kind
        Simplicial, ordered or Delta.
    cells : iterable of Cell
        Every cell of the complex, all dimensions mixed.
    faces : mapping, optional
        ``(cell, j) -> cell`` table.  When omitted for a simplicial or
        ordered complex, entries are derived from vertex lists for every
        face that is present among ``cells``.  No validation happens here;
        use :func:`build_complex` for checked construction and
        :func:`is_valid` to audit a hand-made complex.
    """

    __slots__ = ("_kind", "_grades", "_faces", "_hash")

    def __init__(self, kind: Kind, cells: Iterable[Cell], faces: Mapping | None = None):
        grades: list[set[Cell]] = [set() for _ in range(MAX_DIM + 1)]
        for c in cells:
            c = _coerce(c)
            grades[c.dim].add(c)
        self._kind = Kind(kind)
        self._grades = tuple(frozenset(g) for g in grades)
        if faces is None:
            if self._kind is Kind.DELTA:
                faces = {}
            else:
                present = set().union(*self._grades)
                faces = {}
                for c in present:
                    if c.dim == 0:
                        continue
                    for j in range(c.dim + 1):
                        f = face(c, j)
                        if f in present:
                            faces[(c, j)] = f
        self._faces = MappingProxyType(dict(faces))
        self._hash = None

    @property
    def kind(self) -> Kind:
        return self._kind

    @property
    def X0(self) -> frozenset[Cell]:
        return self._grades[0]

    @property
    def X1(self) -> frozenset[Cell]:
        return self._grades[1]

    @property
    def X2(self) -> frozenset[Cell]:
        return self._grades[2]

    def grade(self, k: int) -> frozenset[Cell]:
        return self._grades[k]

    @property
    def cells(self) -> frozenset[Cell]:
        return self._grades[0] | self._grades[1] | self._grades[2]

    @property
    def faces(self) -> Mapping[tuple[Cell, int], Cell]:
        return self._faces

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(c.vertices[0] for c in self._grades[0])

    @property
    def triangles(self) -> list[Cell]:
        """2-cells in deterministic order."""
        return sorted(self._grades[2], key=Cell.sort_key)

    def __contains__(self, cell) -> bool:
        cell = _coerce(cell)
        return cell in self._grades[cell.dim]

    def face(self, cell: Cell | Sequence[int], j: int) -> Cell:
        """Face map ``d_j`` as stored in this complex."""
        cell = _coerce(cell)
        if cell.dim < 1:
            raise DimensionError("a 0-cell has no faces")
        if not 0 <= j <= cell.dim:
            raise IndexError(f"face index {j} out of range for a {cell.dim}-cell")
        if cell not in self:
            raise KeyError(f"{cell!r} is not a cell of this complex")
        return self._faces[(cell, j)]

    def cofaces(self, cell: Cell | Sequence[int]) -> list[Cell]:
        """Cells having ``cell`` as a face (the inclusion relation)."""
        cell = _coerce(cell)
        found = {c for (c, _), f in self._faces.items() if f == cell}
        return sorted(found, key=Cell.sort_key)

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return (
            self._kind is other._kind
            and self._grades == other._grades
            and dict(self._faces) == dict(other._faces)
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._kind, self._grades, frozenset(self._faces.items())))
        return self._hash

    def __repr__(self):
        sizes = ", ".join(f"X{k}={len(g)}" for k, g in enumerate(self._grades))
        return f"Complex({self._kind.value}, {sizes})"

    # -- serialization -------------------------------------------------

    def to_dict(self) -> dict:
        out: dict = {"kind": self._kind.value}
        tagged = any(c.tag is not None for c in self.cells)
        tags = {}
        for k in range(MAX_DIM + 1):
            ordered = sorted(self._grades[k], key=Cell.sort_key)
            out[f"X{k}"] = [list(c.vertices) for c in ordered]
            if tagged:
                tags[f"X{k}"] = [c.tag for c in ordered]
        entries = []
        for (c, j), f in sorted(self._faces.items(), key=lambda kv: (kv[0][0].sort_key(), kv[0][1])):
            entry = {"cell": list(c.vertices), "j": j, "face": list(f.vertices)}
            if tagged:
                entry["cell_tag"] = c.tag
                entry["face_tag"] = f.tag
            entries.append(entry)
        out["faces"] = entries
        if tagged:
            out["tags"] = tags
        return out

    @classmethod
    def from_dict(cls, data: Mapping) -> "Complex":
        kind = Kind(data["kind"])
        tags = data.get("tags") or {}
        cells = []
        for k in range(MAX_DIM + 1):
            verts = data.get(f"X{k}", [])
            ktags = tags.get(f"X{k}", [None] * len(verts))
            cells.extend(Cell(tuple(v), t) for v, t in zip(verts, ktags))
        faces = {
            (Cell(tuple(e["cell"]), e.get("cell_tag")), int(e["j"])): Cell(tuple(e["face"]), e.get("face_tag"))
            for e in data.get("faces", [])
        }
        return cls(kind, cells, faces)

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_json(cls, text: str) -> "Complex":
        return cls.from_dict(json.loads(text))


def _normalize(cell: Cell, kind: Kind) -> Cell:
    if kind is Kind.DELTA:
        return cell
    if cell.tag is not None:
        raise ConstructionError(f"tags are only allowed in Delta complexes: {cell!r}")
    vs = cell.vertices
    if len(set(vs)) != len(vs):
        raise ConstructionError(f"repeated vertex in {kind.value} cell {vs}")
    if kind is Kind.SIMPLICIAL:
        return Cell(tuple(sorted(vs)))
    if any(a >= b for a, b in zip(vs, vs[1:])):
        raise ConstructionError(f"ordered cell vertex list must be strictly increasing: {vs}")
    return cell


def _closure(cells: Iterable[Cell]) -> set[Cell]:
    out: set[Cell] = set()
    for c in cells:
        for r in range(1, len(c.vertices) + 1):
            out.update(Cell(sub) for sub in combinations(c.vertices, r))
    return out


def build_complex(cells: Iterable, kind: Kind = Kind.ORDERED, faces: Mapping | None = None) -> Complex:
    """Close ``cells`` under faces and return the resulting complex.

    For simplicial and ordered kinds every face of every input cell is added
    and the face table is derived from vertex lists; identical cells
    collapse.  For the Delta kind, ``faces`` must assign ``d_j`` for every
    cell of positive dimension; face targets are added to the complex.

    >>> cx = build_complex([(0, 1, 2)])
    >>> sorted(c.vertices for c in cx.X1)
    [(0, 1), (0, 2), (1, 2)]
    """
    kind = Kind(kind)
    cells = [_normalize(_coerce(c), kind) for c in cells]
    if not cells:
        raise ConstructionError("a complex needs at least one cell")
    if kind is not Kind.DELTA:
        return Complex(kind, _closure(cells))

    faces = {(_coerce(c), int(j)): _coerce(f) for (c, j), f in (faces or {}).items()}
    pending = list(cells)
    seen: set[Cell] = set()
    while pending:
        c = pending.pop()
        if c in seen:
            continue
        seen.add(c)
        for j in range(c.dim + 1 if c.dim else 0):
            try:
                target = faces[(c, j)]
            except KeyError:
                raise ConstructionError(f"Delta cell {c!r} has no face assigned for d_{j}") from None
            if target.dim != c.dim - 1:
                raise ConstructionError(f"d_{j}{c!r} = {target!r} has the wrong dimension")
            pending.append(target)
    stray = {key for key in faces if key[0] not in seen}
    if stray:
        raise ConstructionError(f"face assignments for unknown cells: {sorted(k[0].sort_key() for k in stray)}")
    return Complex(kind, seen, faces)


def _relabel(cx: Complex, mapping: Mapping[int, int]) -> tuple[set[Cell], dict]:
    """Rename vertices; returns cells and face table (Delta) of the image."""
    def ren(c: Cell) -> Cell:
        vs = tuple(mapping.get(v, v) for v in c.vertices)
        if cx.kind is Kind.DELTA:
            return Cell(vs, c.tag)
        if len(set(vs)) != len(vs):
            raise KindViolationError(
                f"identifying vertices collapses {cx.kind.value} cell {c.vertices}; use a Delta complex"
            )
        return Cell(tuple(sorted(vs)))

    cells = {ren(c) for c in cx.cells}
    faces = {(ren(c), j): ren(f) for (c, j), f in cx.faces.items()}
    return cells, faces


def _complete(cells: set[Cell]) -> set[Cell]:
    """Promote every vertex triple whose three edges are present to a 2-cell."""
    cells = set(cells)
    while True:
        nbrs: dict[int, set[int]] = {}
        for c in cells:
            if c.dim == 1:
                a, b = c.vertices
                nbrs.setdefault(a, set()).add(b)
                nbrs.setdefault(b, set()).add(a)
        new = set()
        for a, na in nbrs.items():
            for b in na:
                if b <= a:
                    continue
                for c in na & nbrs[b]:
                    if c > b:
                        tri = Cell((a, b, c))
                        if tri not in cells:
                            new.add(tri)
        if not new:
            return cells
        cells |= new


def _merge(kind: Kind, parts: Sequence[tuple[set[Cell], dict]]) -> Complex:
    cells: set[Cell] = set()
    faces: dict = {}
    for pc, pf in parts:
        cells |= pc
        for key, f in pf.items():
            if faces.setdefault(key, f) != f:
                raise ConstructionError(f"conflicting face assignment for d_{key[1]}{key[0]!r}")
    if kind is Kind.DELTA:
        return Complex(kind, cells, faces)
    return Complex(kind, _complete(cells))


def sew(cx_a: Complex, cx_b: Complex, p: int, q: int) -> Complex:
    """Glue ``cx_b`` onto ``cx_a`` by identifying vertex ``q`` of B with ``p`` of A.

    Grades are united after renaming ``q`` to ``p``; labels shared by both
    complexes are treated as the same vertex.  For simplicial and ordered
    kinds, any vertex triple whose three edges are all present afterwards
    is promoted to a 2-cell.  Delta complexes are united without completion.
    """
    if cx_a.kind is not cx_b.kind:
        raise ConstructionError(f"cannot sew a {cx_a.kind.value} complex to a {cx_b.kind.value} one")
    if Cell((p,)) not in cx_a.X0:
        raise KeyError(f"vertex {p} is not in the first complex")
    if Cell((q,)) not in cx_b.X0:
        raise KeyError(f"vertex {q} is not in the second complex")
    parts = [_relabel(cx_a, {}), _relabel(cx_b, {q: p})]
    return _merge(cx_a.kind, parts)


def glue(cx: Complex, p: int, q: int) -> Complex:
    """Identify vertex ``q`` with ``p`` inside a single complex.

    Composed sews such as attaching both ends of an edge reduce to a sew
    followed by a glue.  Gluing two vertices of one simplicial cell raises
    :class:`KindViolationError`; in a Delta complex it yields a glued cell
    (the cone obtained from a triangle).
    """
    for v in (p, q):
        if Cell((v,)) not in cx.X0:
            raise KeyError(f"vertex {v} is not in the complex")
    return _merge(cx.kind, [_relabel(cx, {q: p})])


def as_delta(cx: Complex) -> Complex:
    """Re-express a simplicial/ordered complex as a Delta complex.

    Cells of positive dimension receive a tag spelling their original
    vertex list, so they stay distinct after later gluings.
    """
    if cx.kind is Kind.DELTA:
        return cx

    def tagged(c: Cell) -> Cell:
        return c if c.dim == 0 else Cell(c.vertices, ".".join(map(str, c.vertices)))

    faces = {(tagged(c), j): tagged(f) for (c, j), f in cx.faces.items()}
    return Complex(Kind.DELTA, {tagged(c) for c in cx.cells}, faces)


def is_valid(cx: Complex) -> tuple[bool, list[str]]:
    """Audit ``cx`` and list every violated invariant.

    Checks, in order: vertex-list shape for the kind, closure under faces,
    completeness and consistency of the face table, and the commutation
    identity ``d_i d_j = d_{j-1} d_i`` for ``i < j`` on every 2-cell.
    """
    problems: list[str] = []
    cells = cx.cells
    simplicial = cx.kind is not Kind.DELTA
    for c in sorted(cells, key=Cell.sort_key):
        vs = c.vertices
        if simplicial:
            if c.tag is not None:
                problems.append(f"tagged cell {vs} in a {cx.kind.value} complex")
            if any(a >= b for a, b in zip(vs, vs[1:])):
                problems.append(f"vertex list {vs} is not strictly increasing")
            for r in range(1, len(vs)):
                for sub in combinations(vs, r):
                    if Cell(sub) not in cells:
                        problems.append(f"missing face {sub} of {vs}")
        if c.dim == 0:
            continue
        for j in range(c.dim + 1):
            f = cx.faces.get((c, j))
            if f is None:
                problems.append(f"no face d_{j} for {c!r}")
            elif f not in cells:
                problems.append(f"d_{j}{c!r} = {f!r} is not a cell of the complex")
            elif f.vertices != vs[:j] + vs[j + 1:]:
                problems.append(f"d_{j}{c!r} = {f!r} does not drop vertex {j}")
    for c in cx.X2:
        for j in range(1, 3):
            for i in range(j):
                try:
                    lhs = cx.faces[(cx.faces[(c, j)], i)]
                    rhs = cx.faces[(cx.faces[(c, i)], j - 1)]
                except KeyError:
                    continue
                if lhs != rhs:
                    problems.append(f"d_{i}d_{j} != d_{j - 1}d_{i} on {c!r}")
    return (not problems, list(dict.fromkeys(problems)))
