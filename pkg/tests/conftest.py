import numpy as np
import pytest

from deltashape import Kind, build_complex, delaunay


def random_points(rng, n, scale=100.0, grid=False):
    """Distinct, non-collinear planar points; ``grid`` draws from a small lattice to force ties."""
    while True:
        if grid:
            pts = rng.integers(0, 4, size=(n, 2)).astype(float)
        else:
            pts = rng.uniform(0, scale, size=(n, 2))
        pts = np.unique(pts, axis=0)
        if len(pts) >= 3 and np.linalg.matrix_rank(pts - pts[0]) == 2:
            return pts


def random_mesh(rng, n=20, grid=False):
    return delaunay(random_points(rng, n, grid=grid))


def random_ordered_complex(rng, max_triangles=30, n_vertices=15):
    """A random ordered complex with up to ``max_triangles`` 2-cells plus some loose edges and vertices."""
    n_tris = int(rng.integers(1, max_triangles + 1))
    cells = [tuple(sorted(rng.choice(n_vertices, size=3, replace=False).tolist())) for _ in range(n_tris)]
    cells += [tuple(sorted(rng.choice(n_vertices, size=2, replace=False).tolist())) for _ in range(int(rng.integers(0, 5)))]
    cells += [(int(v),) for v in rng.choice(n_vertices, size=int(rng.integers(0, 3)))]
    return build_complex(cells, Kind.ORDERED)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
