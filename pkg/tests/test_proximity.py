import numpy as np
import pytest

from deltashape import (
    Cell,
    ConfigurationError,
    ExtractionError,
    FeatureVector,
    Region,
    ShapeRegion,
    TriangleFeatures,
    delaunay,
    descriptive_near,
    graded_strong_near,
    lodato_near,
    spoke_decomposition,
    strong_near,
)
from deltashape.proximity import closure, combinatorial_features, intersection_complex
from conftest import random_mesh

T = Cell


def test_shared_cell_and_disjoint():
    t, u = T((0, 1, 2)), T((5, 6, 7))
    assert strong_near({t}, {t, u})
    assert strong_near({t}, {t, u}, mode="cell")
    assert not strong_near({t}, {u})


def test_vertex_and_cell_modes_differ():
    a, b = {T((0, 1, 2))}, {T((2, 3, 4))}
    assert strong_near(a, b)
    assert not strong_near(a, b, mode="cell")


def test_empty_region_rejected():
    with pytest.raises(ValueError):
        strong_near(set(), {T((0, 1, 2))})


def test_graded_nearness():
    assert graded_strong_near({T((0, 1, 2))}, {T((2, 3, 4))}) == 0
    assert graded_strong_near({T((0, 1, 2))}, {T((1, 2, 3))}) == 1
    assert graded_strong_near({T((0, 1, 2))}, {T((0, 1, 2))}) == 2
    assert graded_strong_near({T((0, 1, 2))}, {T((5, 6, 7))}) is None
    assert intersection_complex({T((0, 1, 2))}, {T((1, 2, 3))}) == {T((1, 2)), T((1,)), T((2,))}


def test_closure_of_triangle():
    assert len(closure([T((0, 1, 2))])) == 7


def test_adjacent_spoke_levels_are_near(rng):
    for _ in range(10):
        K = random_mesh(rng, 20).to_complex()
        dec = spoke_decomposition(K, int(rng.choice(sorted(K.vertices))))
        for j in range(dec.depth):
            assert strong_near(dec.levels[j + 1], dec.levels[j])


def test_relations_are_symmetric(rng):
    K = random_mesh(rng, 20).to_complex()
    phi = combinatorial_features(K)
    tris = sorted(K.X2, key=Cell.sort_key)
    for _ in range(50):
        a = set(rng.choice(len(tris), size=int(rng.integers(1, 4)), replace=False).tolist())
        b = set(rng.choice(len(tris), size=int(rng.integers(1, 4)), replace=False).tolist())
        A, B = {tris[i] for i in a}, {tris[i] for i in b}
        assert strong_near(A, B) == strong_near(B, A)
        assert graded_strong_near(A, B) == graded_strong_near(B, A)
        assert lodato_near(A, B) == lodato_near(B, A)
        assert descriptive_near(A, B, phi, 0.5) == descriptive_near(B, A, phi, 0.5)
        if strong_near(A, B):
            assert lodato_near(A, B) and descriptive_near(A, B, phi)


def two_triangles_half_pixel_apart():
    pts = np.array([(0, 0), (1, 0), (0, 1), (1.5, 0), (2.5, 0), (1.5, 1)], dtype=float)
    A = Region.from_cells([T((0, 1, 2))], pts)
    B = Region.from_cells([T((3, 4, 5))], pts)
    return A, B


def test_lodato_geometric_tolerance():
    A, B = two_triangles_half_pixel_apart()
    assert not strong_near(A, B)
    assert A.geometry.distance(B.geometry) == pytest.approx(0.5)
    assert lodato_near(A, B, eps_geo=1.0)
    assert not lodato_near(A, B, eps_geo=0.1)
    assert not lodato_near(A, B)
    assert lodato_near(A, A)


def test_lodato_needs_geometry_for_tolerance():
    with pytest.raises(ConfigurationError):
        lodato_near({T((0, 1, 2))}, {T((3, 4, 5))}, eps_geo=1.0)


def test_geometric_mode():
    A, B = two_triangles_half_pixel_apart()
    assert not strong_near(A, B, mode="geometric")
    pts = np.array([(0, 0), (1, 0), (0, 1), (1, 0), (2, 0), (1, 1)], dtype=float)
    assert strong_near(Region.from_cells([T((0, 1, 2))], pts), Region.from_cells([T((3, 4, 5))], pts), mode="geometric")
    with pytest.raises(ConfigurationError):
        strong_near({T((0, 1, 2))}, {T((3, 4, 5))}, mode="geometric")


def half_and_half():
    img = np.zeros((20, 40))
    img[:, 20:] = 1.0
    pts = np.array([(2, 2), (10, 2), (2, 10), (25, 2), (35, 2), (25, 10)], dtype=float)
    return img, pts


def test_black_and_white_regions_are_descriptively_far():
    img, pts = half_and_half()
    feats = TriangleFeatures(img, pts)

    def intensity(c):
        return feats(c).components[:1]

    A, B = {T((0, 1, 2))}, {T((3, 4, 5))}
    assert abs(intensity(T((0, 1, 2)))[0] - intensity(T((3, 4, 5)))[0]) == pytest.approx(1.0)
    assert not descriptive_near(A, B, intensity, 0.1)
    assert descriptive_near(A, A, intensity, 0.0)


def test_constant_image_regions_are_descriptively_near():
    img = np.full((20, 40), 0.3)
    _, pts = half_and_half()
    feats = TriangleFeatures(img, pts)

    def image_values(c):
        return feats(c).components[:2]

    assert descriptive_near({T((0, 1, 2))}, {T((3, 4, 5))}, image_values, 0.0)


def test_shared_cell_matches_itself_under_full_features():
    img, pts = half_and_half()
    pts = np.vstack([pts, [(12, 12)]])
    feats = TriangleFeatures(img, pts)
    assert descriptive_near({T((0, 1, 2))}, {T((1, 2, 6))}, feats)
    assert not descriptive_near({T((0, 1, 2))}, {T((1, 2, 6))}, feats, over_closure=False)


def test_triangle_features_are_normalized():
    img, pts = half_and_half()
    f = TriangleFeatures(img, pts)(T((3, 4, 5)))
    assert isinstance(f, FeatureVector)
    assert f.schema == TriangleFeatures.schema
    assert np.all((0 <= f.components) & (f.components <= 1))
    assert f.components[2] == pytest.approx(40 / 800)


def test_feature_extraction_outside_image():
    img, pts = half_and_half()
    pts = np.vstack([pts, [(80, 5)]])
    with pytest.raises(ExtractionError):
        TriangleFeatures(img, pts)(T((0, 1, 6)))
    with pytest.raises(ExtractionError):
        TriangleFeatures(img, pts)(T((0, 1, 9)))


def test_shape_region_from_triangles():
    shape = ShapeRegion.from_triangles([T((0, 1, 2)), T((0, 2, 3)), T((0, 3, 4)), T((0, 1, 4))])
    assert T((0,)) in shape.interior
    assert shape.boundary == {T((1, 2)), T((2, 3)), T((3, 4)), T((1, 4))} | {T((v,)) for v in (1, 2, 3, 4)}
    assert shape.interior & shape.boundary == frozenset()


def test_shape_region_from_mask():
    pts = [(x, y) for y in (0, 10, 20) for x in (0, 10, 20, 30)]
    mesh = delaunay(pts)
    mask = np.zeros((21, 31), dtype=bool)
    mask[:, :21] = True
    shape = ShapeRegion.from_mask(mesh, mask)
    tri_vertices = {v for c in shape.closure if c.dim == 2 for v in c.vertices}
    xs = mesh.points[sorted(tri_vertices)][:, 0]
    assert xs.max() <= 20


def test_feature_vector_checks():
    with pytest.raises(ValueError):
        FeatureVector([np.nan])
    with pytest.raises(ValueError):
        FeatureVector([1.0, 2.0], ("a",))
    assert FeatureVector([0.0, 1.0]).close_to(FeatureVector([0.05, 1.0]), 0.1)
