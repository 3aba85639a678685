import numpy as np
import pytest

from deltashape import (
    DegeneracyError,
    InsufficientKeypointsError,
    Keypoint,
    Mesh,
    curvilinear,
    delaunay,
    detect_keypoints,
    hull_containment,
    sample_curve,
)
from deltashape.oracle import brute_force_delaunay, compare_with_oracle
from deltashape.predicates import incircle, orient2d
from deltashape.synthetic import square_image, step_image
from deltashape.triangulate import CurvedMesh, edge_control_indices
from conftest import random_mesh, random_points


# keypoints

def test_constant_image_has_no_keypoints():
    with pytest.raises(InsufficientKeypointsError):
        detect_keypoints(np.full((32, 32), 0.4))


def test_step_edge_keypoints_on_the_step():
    kps = detect_keypoints(step_image(column=30), max_count=50, nms_radius=4)
    assert len(kps) >= 3
    assert all(abs(k.x - 30) <= 1 for k in kps)


def test_square_keypoints_on_boundary():
    img = square_image(64, 16, 48)
    kps = detect_keypoints(img, max_count=100, nms_radius=4)
    for k in kps:
        d = min(abs(k.x - 15.5), abs(k.x - 47.5), abs(k.y - 15.5), abs(k.y - 47.5))
        assert d <= 1.0
        assert 14 <= k.x <= 49 and 14 <= k.y <= 49


def test_keypoints_sorted_and_deterministic():
    img = square_image()
    a, b = detect_keypoints(img), detect_keypoints(img.copy())
    assert a == b
    scores = [k.score for k in a]
    assert scores == sorted(scores, reverse=True)


def test_keypoints_respect_nms_and_max_count(rng):
    img = rng.uniform(size=(64, 64))
    kps = detect_keypoints(img, max_count=20, nms_radius=6)
    assert len(kps) <= 20
    xy = np.array([k.xy for k in kps])
    d = np.sqrt(((xy[:, None] - xy[None]) ** 2).sum(-1)) + np.eye(len(xy)) * 1e9
    assert d.min() > 6


def test_max_count_must_allow_a_triangle():
    with pytest.raises(ValueError):
        detect_keypoints(square_image(), max_count=2)


# Delaunay

def test_three_points_one_triangle():
    assert delaunay([(0, 0), (4, 0), (1, 3)]).triangles == ((0, 1, 2),)


def test_unit_square_uses_lowest_index_diagonal():
    m = delaunay([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert set(m.triangles) == {(0, 1, 2), (0, 2, 3)}
    m = delaunay([(1, 0), (0, 0), (1, 1), (0, 1)])
    assert set(m.triangles) == {(0, 1, 3), (0, 2, 3)}


def test_degenerate_inputs():
    with pytest.raises(DegeneracyError):
        delaunay([(0, 0), (1, 1), (2, 2), (3, 3)])
    with pytest.raises(DegeneracyError):
        delaunay([(0, 0), (1, 1)])


def test_duplicates_are_removed_with_warning():
    with pytest.warns(UserWarning):
        m = delaunay([(0, 0), (1, 0), (0, 1), (1, 0)])
    assert len(m.vertices) == 3


def test_keypoint_input_keeps_order():
    kps = [Keypoint(0, 0, 5), Keypoint(3, 0, 4), Keypoint(0, 3, 3)]
    m = delaunay(kps)
    assert [v.xy for v in m.vertices] == [k.xy for k in kps]


def test_matches_brute_force_oracle(rng):
    for i in range(60):
        pts = random_points(rng, int(rng.integers(3, 13)), grid=bool(i % 2))
        ok, missing, extra = compare_with_oracle(pts)
        assert ok, (pts.tolist(), missing, extra)


def test_empty_circumcircle_and_edge_sharing(rng):
    for _ in range(10):
        m = random_mesh(rng, 40)
        pts = m.points
        for t in m.triangles:
            a, b, c = pts[list(t)]
            if orient2d(a, b, c) < 0:
                b, c = c, b
            for v in range(len(pts)):
                if v not in t:
                    assert incircle(a, b, c, pts[v]) <= 0
        counts = [len(m.edge_adjacency[e]) for e in m.edges]
        assert set(counts) <= {1, 2}


def test_boundary_is_convex_hull_cycle(rng):
    from scipy.spatial import ConvexHull

    m = random_mesh(rng, 30)
    bdy = m.boundary_edges
    hull = ConvexHull(m.points)
    hull_edges = {tuple(sorted(s)) for s in hull.simplices.tolist()}
    assert set(bdy) == hull_edges
    deg = {}
    for a, b in bdy:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    assert set(deg.values()) == {2}


def test_mesh_dict_round_trip_and_complex(rng):
    m = random_mesh(rng, 15)
    back = Mesh.from_dict(m.to_dict())
    assert back.triangles == m.triangles
    np.testing.assert_array_equal(back.points, m.points)
    K = m.to_complex()
    assert len(K.X2) == len(m.triangles) and len(K.X1) == len(m.edges)


def test_oracle_enumerates_square_tie():
    assert brute_force_delaunay([(0, 0), (1, 0), (1, 1), (0, 1)]) == {(0, 1, 2), (0, 2, 3)}


# curvilinear projection

def test_single_triangle_quadratics():
    m = delaunay([(0, 0), (4, 0), (1, 3)])
    cm = curvilinear(m)
    for (a, b), curve in cm.edge_splines.items():
        opp = ({0, 1, 2} - {a, b}).pop()
        assert curve.degree == 2
        np.testing.assert_array_equal(curve.control, m.points[[a, opp, b]])
    ok, worst = hull_containment(cm)
    assert ok and worst <= 1e-6


def test_shared_edge_has_four_control_points():
    m = delaunay([(0, 0), (2, -1), (2, 1), (4, 0)])
    shared = [e for e in m.edges if len(m.edge_adjacency[e]) == 2]
    assert shared == [(1, 2)]
    cm = curvilinear(m)
    assert edge_control_indices(m, (1, 2)) == [1, 0, 3, 2]
    assert len(cm.edge_splines[(1, 2)].control) == 4
    assert cm.edge_splines[(1, 2)].degree == 3


def test_splines_interpolate_edge_endpoints(rng):
    m = random_mesh(rng, 20)
    cm = curvilinear(m, w=2.0)
    for (a, b), c in cm.edge_splines.items():
        np.testing.assert_allclose(c(0.0), m.points[a], atol=1e-9)
        np.testing.assert_allclose(c(1.0), m.points[b], atol=1e-9)


def test_flat_configuration_gives_straight_edges():
    pts = [(0, 0), (1, 0), (2, 0), (3, 0), (1.5, 2)]
    cm = curvilinear(delaunay(pts))
    for (a, b), c in cm.edge_splines.items():
        if all(cm.base.points[i][1] == 0 for i in edge_control_indices(cm.base, (a, b))):
            assert np.max(np.abs(sample_curve(c, 20)[:, 1])) <= 1e-9


def test_containment_with_extreme_weights(rng):
    for _ in range(10):
        m = random_mesh(rng, 25)
        for w in (0.01, 1.0, 100.0):
            ok, worst = hull_containment(curvilinear(m, w=w))
            assert ok, worst


def test_explicit_degree_and_errors():
    m = delaunay([(0, 0), (2, -1), (2, 1), (4, 0)])
    cm = curvilinear(m, degree=2)
    assert {c.degree for c in cm.edge_splines.values()} == {2}
    with pytest.raises(ValueError):
        curvilinear(m, degree=1)
    with pytest.raises(ValueError):
        curvilinear(m, w=[1.0, 2.0])
    with pytest.raises(ValueError):
        hull_containment(cm, samples_per_edge=1)


def test_curved_mesh_round_trip(rng):
    cm = curvilinear(random_mesh(rng, 12), w=3.0)
    back = CurvedMesh.from_dict(cm.to_dict())
    assert back.edge_splines.keys() == cm.edge_splines.keys()
    for e, c in cm.edge_splines.items():
        np.testing.assert_array_equal(sample_curve(back.edge_splines[e], 9), sample_curve(c, 9))
