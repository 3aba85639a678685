import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.interpolate import BSpline

from deltashape import (
    BSplineCurve,
    DomainError,
    KnotVector,
    basis,
    basis_table,
    clamped_uniform_knots,
    continuity_class,
    eval_curve,
    sample_curve,
)


def random_clamped_knots(rng, degree, n_control):
    interior = np.sort(rng.uniform(0, 1, n_control - degree - 1))
    return KnotVector((0.0,) * (degree + 1) + tuple(interior) + (1.0,) * (degree + 1))


def scipy_basis(T, degree, t):
    T = np.asarray(T.knots)
    n = len(T) - degree - 1
    return BSpline(T, np.eye(n), degree, extrapolate=False)(t)


# basis functions

def test_degree_zero_indicator():
    T = KnotVector((0.0, 0.5, 1.0))
    assert basis(0, 0, 0.25, T) == 1.0
    assert basis(1, 0, 0.25, T) == 0.0


def test_uniform_hat_peak():
    T = KnotVector((0.0, 0.25, 0.5, 0.75, 1.0))
    assert basis(0, 1, 0.25, T) == pytest.approx(1.0, abs=1e-15)


def test_quadratic_bezier_partition_of_unity():
    T = KnotVector((0, 0, 0, 1, 1, 1))
    for t in np.linspace(0, 1, 100):
        assert abs(sum(basis(i, 2, t, T) for i in range(3)) - 1.0) <= 1e-9


def test_right_end_is_closed():
    T = KnotVector((0, 0, 0, 1, 1, 1))
    assert basis(2, 2, 1.0, T) == 1.0
    assert basis_table(T, 2, 1.0).tolist() == [0.0, 0.0, 1.0]


def test_basis_errors():
    T = KnotVector((0, 0, 0, 1, 1, 1))
    with pytest.raises(IndexError):
        basis(3, 2, 0.5, T)
    with pytest.raises(DomainError):
        basis_table(T, 2, 1.5)


def test_knot_vector_validation():
    with pytest.raises(ValueError):
        KnotVector((0.0, 0.6, 0.5, 1.0))
    with pytest.raises(ValueError):
        KnotVector((0.5, 0.5))
    assert clamped_uniform_knots(4, 2).knots == (0.0, 0.0, 0.0, 0.5, 1.0, 1.0, 1.0)


def test_basis_matches_scipy(rng):
    for _ in range(30):
        degree = int(rng.integers(1, 4))
        n = int(rng.integers(degree + 1, 9))
        T = random_clamped_knots(rng, degree, n)
        t = rng.uniform(0, 1, 200)
        np.testing.assert_allclose(basis_table(T, degree, t), scipy_basis(T, degree, t), atol=1e-12)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3), st.integers(0, 5), st.floats(0, 1))
def test_nonnegative_partition_and_local_support(degree, extra, t):
    T = clamped_uniform_knots(degree + 1 + extra, degree)
    N = basis_table(T, degree, t)
    assert np.all(N >= 0)
    assert abs(N.sum() - 1) <= 1e-9
    k = T.knots
    for i, v in enumerate(N):
        if not k[i] <= t <= k[i + degree + 1]:
            assert v == 0.0


# curves

def test_constant_control_points():
    Q = (3.0, -2.0)
    c = BSplineCurve.clamped([Q] * 5, 3, weights=[1, 2, 3, 4, 5])
    np.testing.assert_allclose(sample_curve(c, 50), np.tile(Q, (50, 1)), atol=1e-12)


def test_endpoint_interpolation(rng):
    for _ in range(20):
        P = rng.normal(size=(int(rng.integers(3, 7)), 2))
        c = BSplineCurve.clamped(P, int(rng.integers(2, len(P))))
        assert np.linalg.norm(c(0.0) - P[0]) <= 1e-9
        assert np.linalg.norm(c(1.0) - P[-1]) <= 1e-9


def test_degree_one_midpoint():
    c = BSplineCurve.clamped([(0, 0), (1, 1)], 1)
    np.testing.assert_allclose(eval_curve(c, 0.5), (0.5, 0.5))


def test_curve_matches_scipy(rng):
    for _ in range(20):
        degree = int(rng.integers(2, 4))
        P = rng.normal(size=(int(rng.integers(degree + 1, 8)), 2))
        T = random_clamped_knots(rng, degree, len(P))
        ours = BSplineCurve(P, T)
        ref = BSpline(np.asarray(T.knots), P, degree)
        t = np.linspace(0, 1, 101)
        np.testing.assert_allclose(eval_curve(ours, t), ref(t), atol=1e-12)


def test_uniform_weights_are_neutral(rng):
    P = rng.normal(size=(5, 2))
    plain = BSplineCurve.clamped(P, 3)
    heavy = BSplineCurve.clamped(P, 3, weights=[7.5] * 5)
    t = np.linspace(0, 1, 64)
    np.testing.assert_allclose(eval_curve(plain, t), eval_curve(heavy, t), atol=1e-12, rtol=0)


def test_sample_two_points_are_endpoints():
    P = np.array([(0, 0), (2, 3), (4, 0)], dtype=float)
    c = BSplineCurve.clamped(P, 2)
    np.testing.assert_allclose(sample_curve(c, 2), [c(0.0), c(1.0)])
    with pytest.raises(ValueError):
        sample_curve(c, 1)


def test_straight_control_polygon_gives_collinear_samples():
    P = np.array([(0, 0), (1, 2), (3, 6), (4, 8)], dtype=float)
    xy = sample_curve(BSplineCurve.clamped(P, 3, weights=[1, 4, 0.5, 1]), 40)
    assert np.max(np.abs(xy[:, 1] - 2 * xy[:, 0])) <= 1e-9


def test_samples_stay_in_control_hull(rng):
    from scipy.spatial import Delaunay as QhullDelaunay

    for _ in range(20):
        P = rng.normal(size=(5, 2))
        c = BSplineCurve.clamped(P, int(rng.integers(2, 5)), weights=rng.uniform(0.1, 10, 5))
        hull = QhullDelaunay(P)
        xy = sample_curve(c, 64)
        assert np.all(hull.find_simplex(xy, tol=1e-9) >= 0)


def test_weights_must_be_positive():
    with pytest.raises(ValueError):
        BSplineCurve.clamped([(0, 0), (1, 1), (2, 0)], 2, weights=[1, 0, 1])


def test_curve_dict_round_trip():
    c = BSplineCurve.clamped([(0, 0), (1, 2), (3, 1), (4, 0)], 2, weights=[1, 2, 3, 1])
    back = BSplineCurve.from_dict(c.to_dict())
    np.testing.assert_array_equal(back.control, c.control)
    assert back.knots == c.knots and back.degree == 2


# continuity

def test_continuity_class_from_multiplicity():
    cubic = BSplineCurve(np.zeros((5, 2)), KnotVector((0, 0, 0, 0, 0.5, 1, 1, 1, 1)))
    assert continuity_class(cubic, 4) == 2
    quad = BSplineCurve(np.zeros((5, 2)), KnotVector((0, 0, 0, 0.5, 0.5, 1, 1, 1)))
    assert continuity_class(quad, 3) == 0
    with pytest.raises(DomainError):
        continuity_class(quad, 0)


def one_sided_derivatives(c, u, h=1e-5):
    """Second-order finite differences of C' at ``u`` from the left and from the right."""
    left = (3 * c(u) - 4 * c(u - h) + c(u - 2 * h)) / (2 * h)
    right = (-3 * c(u) + 4 * c(u + h) - c(u + 2 * h)) / (2 * h)
    return left, right


def test_cubic_first_derivative_is_continuous_at_simple_knot(rng):
    for _ in range(10):
        c = BSplineCurve(rng.normal(size=(5, 2)), KnotVector((0, 0, 0, 0, 0.5, 1, 1, 1, 1)))
        left, right = one_sided_derivatives(c, 0.5)
        assert np.max(np.abs(left - right)) <= 1e-4


def test_doubled_knot_of_quadratic_has_a_kink():
    P = np.array([(0, 0), (1, 2), (2, 0), (3, 2), (4, 0)], dtype=float)
    c = BSplineCurve(P, KnotVector((0, 0, 0, 0.5, 0.5, 1, 1, 1)))
    left, right = one_sided_derivatives(c, 0.5)
    assert np.max(np.abs(left - right)) > 1.0
