"""
Randomized checks of the nearness results for spoke complexes.

Each check is an implication evaluated on concrete decompositions; a
failure is recorded with enough context to reproduce it.  Nothing here
raises on a failed check.

T1  nucleus in the interior of a shape  =>  interior strongly near the nerve
T2  k-strongly near  =>  (k-1)-strongly near
T3  object spaces strongly near  <=>  some pair of their spoke complexes is
T4  consecutive spoke complexes are strongly near below the boundary level
L1  strongly near  =>  Lodato near and descriptively near
T5  T4 combined with L1
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

import numpy as np

from .complex import Cell, Complex
from .nerve import SpokeDecomposition, nerve, object_space, spoke_decomposition
from .proximity import (
    Region,
    ShapeRegion,
    combinatorial_features,
    descriptive_near,
    graded_strong_near,
    intersection_complex,
    lodato_near,
    strong_near,
)

__all__ = ["TheoremReport", "theorem_suite", "boundary_level", "EXHAUSTIVE_T3_LIMIT"]

EXHAUSTIVE_T3_LIMIT = 15


@dataclass
class TheoremReport:
    theorem: str
    trials: int = 0
    checks: int = 0
    vacuous: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, **context) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(context)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "trials": self.trials,
            "checks": self.checks,
            "vacuous": self.vacuous,
            "failures": self.failures,
        }


def _cells(cs) -> list:
    return [list(c.vertices) for c in sorted(cs, key=Cell.sort_key)]


def boundary_level(dec: SpokeDecomposition) -> int:
    """Largest spoke order whose complex meets the boundary of the object space."""
    tris = frozenset().union(*dec.levels[1:])
    if not tris:
        return 0
    bdy_vertices = {c.vertices[0] for c in ShapeRegion.from_triangles(tris).boundary if c.dim == 0}
    hits = [k for k in range(1, dec.depth + 1) if any(bdy_vertices & t.vertex_set for t in dec.levels[k])]
    return max(hits) if hits else 0


def _ball(dec: SpokeDecomposition, radius: int) -> list[Cell]:
    return [t for lvl in dec.levels[1:radius + 1] for t in lvl]


def _t1(K, p, dec, rng, report):
    centers = [p, int(rng.choice(sorted(K.vertices)))]
    for q in centers:
        qdec = dec if q == p else spoke_decomposition(K, q)
        tris = _ball(qdec, int(rng.integers(1, 3)))
        if not tris:
            report.vacuous += 1
            continue
        shape = ShapeRegion.from_triangles(tris)
        if Cell((p,)) not in shape.interior:
            report.vacuous += 1
            continue
        report.check(strong_near(Region(shape.interior), Region(nerve(K, p))), nucleus=p, shape=_cells(tris))


def _t2(dec, p, report):
    regions = [lvl for lvl in dec.levels if lvl]
    for a, b in combinations(range(len(regions)), 2):
        k = graded_strong_near(regions[a], regions[b])
        if k is None or k == 0:
            report.vacuous += 1
            continue
        dims = {c.dim for c in intersection_complex(regions[a], regions[b])}
        report.check(all(d in dims for d in range(k)), nucleus=p, levels=[a, b], grade=k)


def _t4_t5_l1(K, p, dec, phi, reports):
    t4, l1, t5 = reports
    khat = boundary_level(dec)
    if khat <= 1:
        t4.vacuous += 1
        t5.vacuous += 1
    for j in range(1, khat):
        up = strong_near(dec.levels[j + 1], dec.levels[j])
        down = strong_near(dec.levels[j], dec.levels[j - 1])
        t4.check(up and down, nucleus=p, j=j, khat=khat)
        for hi, lo in ((j + 1, j), (j, j - 1)):
            if strong_near(dec.levels[hi], dec.levels[lo]):
                A, B = dec.levels[hi], dec.levels[lo]
                t5.check(lodato_near(A, B) and descriptive_near(A, B, phi), nucleus=p, levels=[hi, lo])
    for a, b in combinations(range(dec.depth + 1), 2):
        A, B = dec.levels[a], dec.levels[b]
        if not strong_near(A, B):
            l1.vacuous += 1
            continue
        l1.check(
            lodato_near(A, B) and lodato_near(B, A) and descriptive_near(A, B, phi) and descriptive_near(B, A, phi),
            nucleus=p,
            levels=[a, b],
        )


def _t3(K, p, q, decs, report):
    op, oq = object_space(K, p).cells, object_space(K, q).cells
    if not op or not oq:
        report.vacuous += 1
        return
    lhs = strong_near(op, oq)
    dp, dq = decs(p), decs(q)
    rhs = any(
        strong_near(dp.levels[k], dq.levels[kk])
        for k in range(1, dp.depth + 1)
        for kk in range(1, dq.depth + 1)
    )
    report.check(lhs == rhs, nuclei=[p, q], object_spaces_near=lhs, spoke_pair_near=rhs)


def theorem_suite(
    K: Complex,
    trials: int = 10,
    seed: int = 0,
    phi: Callable | None = None,
    nuclei: Iterable[int] | None = None,
) -> list[TheoremReport]:
    """Check T1-T5 and L1 around ``trials`` random nuclei of ``K``.

    Passing ``nuclei`` replaces the random draw with that exact list.

    T3 runs over every pair of vertices when ``K`` has at most
    ``EXHAUSTIVE_T3_LIMIT`` triangles, otherwise over ``trials`` random pairs.
    ``phi`` is the descriptor for descriptive nearness; an image-free
    combinatorial one is used by default.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = np.random.default_rng(seed)
    phi = phi or combinatorial_features(K)
    names = ["T1", "T2", "T3", "T4", "L1", "T5"]
    reports = {n: TheoremReport(n) for n in names}

    candidates = sorted({v for t in K.X2 for v in t.vertex_set})
    if not candidates:
        return list(reports.values())
    if nuclei is None:
        nuclei = [int(v) for v in rng.choice(candidates, size=trials, replace=trials > len(candidates))]
    else:
        nuclei = [int(v) for v in nuclei]
    cache: dict[int, SpokeDecomposition] = {}

    def decs(v):
        if v not in cache:
            cache[v] = spoke_decomposition(K, v)
        return cache[v]

    for p in nuclei:
        dec = decs(p)
        for n in ("T1", "T2", "T4", "L1", "T5"):
            reports[n].trials += 1
        _t1(K, p, dec, rng, reports["T1"])
        _t2(dec, p, reports["T2"])
        _t4_t5_l1(K, p, dec, phi, (reports["T4"], reports["L1"], reports["T5"]))

    if len(K.X2) <= EXHAUSTIVE_T3_LIMIT:
        pairs = list(combinations(sorted(K.vertices), 2))
    elif len(candidates) > 1:
        pairs = [tuple(int(v) for v in rng.choice(candidates, size=2, replace=False)) for _ in range(trials)]
    else:
        pairs = []
    for p, q in pairs:
        reports["T3"].trials += 1
        _t3(K, p, q, decs, reports["T3"])
    return list(reports.values())


def reports_to_json(reports: list[TheoremReport], **kwargs) -> str:
    return json.dumps([r.to_dict() for r in reports], **kwargs)
