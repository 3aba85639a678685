"""
Orientation and in-circle predicates with exact fallback.

Each predicate first evaluates in floating point and accepts the sign when
it clears Shewchuk's static error bound; otherwise it recomputes with
:class:`fractions.Fraction`, which is exact for float inputs.

Cocircular ties are broken by symbolic perturbation: point ``i`` is lifted
to ``x^2 + y^2 - eps**(i + 1)``, so lower indices sink further below the
paraboloid.  In a cocircular quadrilateral this selects the diagonal
through the lowest index.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

_EPS = 2.0 ** -53
_CCW_BOUND = (3.0 + 16.0 * _EPS) * _EPS
_ICC_BOUND = (10.0 + 96.0 * _EPS) * _EPS

Point = Sequence[float]


def _sign(x) -> int:
    return int(x > 0) - int(x < 0)


def orient2d(a: Point, b: Point, c: Point) -> int:
    """+1 if ``a, b, c`` turn counter-clockwise, -1 if clockwise, 0 if collinear."""
    detleft = (a[0] - c[0]) * (b[1] - c[1])
    detright = (a[1] - c[1]) * (b[0] - c[0])
    det = detleft - detright
    if abs(det) > _CCW_BOUND * (abs(detleft) + abs(detright)):
        return _sign(det)
    ax, ay, bx, by, cx, cy = (Fraction(v) for v in (a[0], a[1], b[0], b[1], c[0], c[1]))
    return _sign((ax - cx) * (by - cy) - (ay - cy) * (bx - cx))


def incircle(a: Point, b: Point, c: Point, d: Point) -> int:
    """+1 if ``d`` is inside the circle through ``a, b, c`` (given CCW), -1 outside, 0 on it."""
    adx, ady = a[0] - d[0], a[1] - d[1]
    bdx, bdy = b[0] - d[0], b[1] - d[1]
    cdx, cdy = c[0] - d[0], c[1] - d[1]
    bdxcdy, cdxbdy = bdx * cdy, cdx * bdy
    cdxady, adxcdy = cdx * ady, adx * cdy
    adxbdy, bdxady = adx * bdy, bdx * ady
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady)
    permanent = (
        (abs(bdxcdy) + abs(cdxbdy)) * alift
        + (abs(cdxady) + abs(adxcdy)) * blift
        + (abs(adxbdy) + abs(bdxady)) * clift
    )
    if abs(det) > _ICC_BOUND * permanent:
        return _sign(det)
    F = Fraction
    adx, ady = F(a[0]) - F(d[0]), F(a[1]) - F(d[1])
    bdx, bdy = F(b[0]) - F(d[0]), F(b[1]) - F(d[1])
    cdx, cdy = F(c[0]) - F(d[0]), F(c[1]) - F(d[1])
    det = (
        (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
        + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady)
    )
    return _sign(det)


def incircle_perturbed(points, ia: int, ib: int, ic: int, id_: int) -> int:
    """In-circle sign with index-based symbolic perturbation; never returns 0
    for four distinct points.

    ``points[ia], points[ib], points[ic]`` must be counter-clockwise.
    """
    s = incircle(points[ia], points[ib], points[ic], points[id_])
    if s:
        return s
    # D(z) = det[[x, y, z, 1], ...]; dD/dz_row = (-1)**row * orient(other rows)
    rows = (ia, ib, ic, id_)
    for row in sorted(range(4), key=lambda r: rows[r]):
        others = [points[rows[r]] for r in range(4) if r != row]
        coef = (-1) ** row * orient2d(*others)
        if coef:
            # lowering z_row by a dominant infinitesimal changes D by -coef * delta
            return -coef
    return 0
