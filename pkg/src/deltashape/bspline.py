"""
B-spline curves on knot vectors in [0, 1], with optional control-point weights.

The basis follows the Cox-de Boor recursion with two conventions:

* a ratio whose denominator vanishes (repeated knots) contributes 0;
* degree-0 intervals are half-open ``[t_i, t_{i+1})`` except that the last
  non-empty interval also contains ``t_m``, so clamped curves reach their
  final control point at ``t = t_m``.

With every weight equal to 1 the curve is ``C(t) = sum_i P_i N_{i,p}(t)``;
otherwise the rational form ``sum w_i P_i N_i / sum w_i N_i`` is used.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

__all__ = [
    "KnotVector",
    "BSplineCurve",
    "clamped_uniform_knots",
    "basis",
    "basis_table",
    "eval_curve",
    "sample_curve",
    "continuity_class",
]


@dataclass(frozen=True)
class KnotVector:
    knots: tuple[float, ...]

    def __post_init__(self):
        t = tuple(float(x) for x in self.knots)
        if len(t) < 2:
            raise ValueError("a knot vector needs at least two knots")
        if any(b < a for a, b in zip(t, t[1:])):
            raise ValueError("knots must be non-decreasing")
        if t[0] < 0.0 or t[-1] > 1.0:
            raise ValueError("knots must lie in [0, 1]")
        if t[0] == t[-1]:
            raise ValueError("knot vector spans an empty domain")
        object.__setattr__(self, "knots", t)

    @property
    def m(self) -> int:
        return len(self.knots) - 1

    @property
    def domain(self) -> tuple[float, float]:
        return self.knots[0], self.knots[-1]

    def multiplicity(self, value: float) -> int:
        return sum(1 for x in self.knots if x == value)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.knots)


def clamped_uniform_knots(n_control: int, degree: int) -> KnotVector:
    """Clamped knots with uniformly spaced interior knots.

    The first and last values are repeated ``degree + 1`` times, which makes
    the curve start at the first and end at the last control point.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    if n_control < degree + 1:
        raise ValueError(f"{n_control} control points cannot carry a degree-{degree} spline")
    n_interior = n_control - degree - 1
    interior = [(i + 1) / (n_interior + 1) for i in range(n_interior)]
    return KnotVector((0.0,) * (degree + 1) + tuple(interior) + (1.0,) * (degree + 1))


def _as_knots(T) -> KnotVector:
    return T if isinstance(T, KnotVector) else KnotVector(tuple(T))


def basis_table(T, degree: int, t) -> np.ndarray:
    """Evaluate ``N_{i,degree}(t)`` for every admissible ``i``.

    Returns an array of shape ``(m - degree,)`` for scalar ``t`` or
    ``(len(t), m - degree)`` for an array of parameters.
    """
    T = _as_knots(T)
    knots = T.as_array()
    m = T.m
    if degree < 0 or degree >= m:
        raise IndexError(f"degree {degree} is out of range for {m + 1} knots")
    scalar = np.ndim(t) == 0
    ts = np.atleast_1d(np.asarray(t, dtype=float))
    lo, hi = T.domain
    if np.any((ts < lo) | (ts > hi)):
        raise DomainError(f"parameter outside the knot domain [{lo}, {hi}]")

    left, right = knots[:-1], knots[1:]
    N = ((ts[:, None] >= left) & (ts[:, None] < right) & (left < right)).astype(float)
    # closed right end: t == t_m belongs to the last non-empty interval
    last = int(np.nonzero(left < right)[0][-1])
    N[ts == hi, :] = 0.0
    N[ts == hi, last] = 1.0

    for j in range(1, degree + 1):
        count = m - j
        ti = knots[:count]
        tij = knots[j:j + count]
        ti1 = knots[1:1 + count]
        tij1 = knots[j + 1:j + 1 + count]
        d1 = tij - ti
        d2 = tij1 - ti1
        with np.errstate(divide="ignore", invalid="ignore"):
            a = np.where(d1 > 0, (ts[:, None] - ti) / np.where(d1 > 0, d1, 1.0), 0.0)
            b = np.where(d2 > 0, (tij1 - ts[:, None]) / np.where(d2 > 0, d2, 1.0), 0.0)
        N = a * N[:, :count] + b * N[:, 1:count + 1]
    return N[0] if scalar else N


def basis(i: int, j: int, t: float, T) -> float:
    """Single basis value ``N_{i,j}(t)``.

    >>> basis(0, 0, 0.25, [0, 0.5, 1])
    1.0
    """
    T = _as_knots(T)
    if i < 0 or j < 0 or i + j + 1 > T.m:
        raise IndexError(f"basis N_{{{i},{j}}} is undefined for {T.m + 1} knots")
    return float(basis_table(T, j, t)[i])


@dataclass(frozen=True, eq=False)
class BSplineCurve:
    """Planar B-spline with control points ``P_0..P_n`` and weights.

    ``degree`` is implied by ``m = n + degree + 1``.  Use :meth:`clamped`
    to build a curve on clamped-uniform knots.
    """

    control: np.ndarray
    knots: KnotVector
    weights: np.ndarray = field(default=None)

    def __post_init__(self):
        P = np.array(self.control, dtype=float)
        if P.ndim != 2 or P.shape[1] != 2:
            raise ValueError("control points must have shape (n + 1, 2)")
        T = _as_knots(self.knots)
        w = np.ones(len(P)) if self.weights is None else np.array(self.weights, dtype=float).reshape(-1)
        if len(w) != len(P):
            raise ValueError(f"{len(w)} weights for {len(P)} control points")
        if not np.all(w > 0) or not np.all(np.isfinite(w)):
            raise ValueError("weights must be positive and finite")
        degree = T.m - len(P)
        if degree < 1:
            raise ValueError(f"{T.m + 1} knots and {len(P)} control points give degree {degree} < 1")
        P.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "control", P)
        object.__setattr__(self, "knots", T)
        object.__setattr__(self, "weights", w)

    @classmethod
    def clamped(cls, control, degree: int, weights=None) -> "BSplineCurve":
        return cls(control, clamped_uniform_knots(len(control), degree), weights)

    @property
    def degree(self) -> int:
        return self.knots.m - len(self.control)

    @property
    def n(self) -> int:
        return len(self.control) - 1

    def __call__(self, t):
        return eval_curve(self, t)

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "knots": list(self.knots.knots),
            "control": self.control.tolist(),
            "weights": self.weights.tolist(),
        }

    @classmethod
    def from_dict(cls, data) -> "BSplineCurve":
        curve = cls(data["control"], KnotVector(tuple(data["knots"])), data.get("weights"))
        if "degree" in data and int(data["degree"]) != curve.degree:
            raise ValueError("stored degree disagrees with knots and control points")
        return curve


def eval_curve(curve: BSplineCurve, t) -> np.ndarray:
    """Point(s) on the curve; shape ``(2,)`` for scalar ``t``, else ``(k, 2)``."""
    N = np.atleast_2d(basis_table(curve.knots, curve.degree, t))
    wN = N * curve.weights
    den = wN.sum(axis=1)
    if np.any(den <= 0):
        raise DomainError("parameter lies outside the support of every basis function")
    pts = (wN @ curve.control) / den[:, None]
    return pts[0] if np.ndim(t) == 0 else pts


def sample_curve(curve: BSplineCurve, n_samples: int) -> np.ndarray:
    """Evaluate at ``n_samples`` uniformly spaced parameters, endpoints included."""
    if n_samples < 2:
        raise ValueError("need at least two samples")
    lo, hi = curve.knots.domain
    return eval_curve(curve, np.linspace(lo, hi, n_samples))


def continuity_class(curve: BSplineCurve, at_knot: int) -> int:
    """Order of differentiability ``p - k`` at an interior knot of multiplicity ``k``."""
    knots = curve.knots.knots
    if not 0 <= at_knot < len(knots):
        raise IndexError(f"knot index {at_knot} out of range")
    value = knots[at_knot]
    if value in (knots[0], knots[-1]):
        raise DomainError("continuity is only defined at interior knots")
    return curve.degree - curve.knots.multiplicity(value)
