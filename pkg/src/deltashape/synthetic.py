"""Small synthetic images and complexes used by tests, demos and the CLI."""

from __future__ import annotations

import numpy as np

from .complex import Complex, Kind, build_complex
from .triangulate import Keypoint, Mesh

__all__ = [
    "disk_image",
    "square_image",
    "step_image",
    "grid_nerve_mesh",
    "grid_nerve_complex",
    "two_component_complex",
    "GRID_CENTER",
]

GRID_CENTER = 0


def disk_image(size: int = 256, radius: float = 80.0, center: tuple[float, float] | None = None) -> np.ndarray:
    """White disk on black; pixel (row, col) is inside when its centre is within ``radius``."""
    cy, cx = center if center is not None else ((size - 1) / 2, (size - 1) / 2)
    rows, cols = np.mgrid[0:size, 0:size]
    return (((cols - cx) ** 2 + (rows - cy) ** 2) < radius ** 2).astype(float)


def square_image(size: int = 64, lo: int = 16, hi: int = 48) -> np.ndarray:
    img = np.zeros((size, size))
    img[lo:hi, lo:hi] = 1.0
    return img


def step_image(shape: tuple[int, int] = (48, 64), column: int = 30) -> np.ndarray:
    """Black left half, white from ``column`` onwards."""
    img = np.zeros(shape)
    img[:, column:] = 1.0
    return img


def grid_nerve_mesh() -> Mesh:
    """3x3 grid where the centre touches four inner triangles and each corner one outer triangle.

    The centre is vertex 0; the other grid points follow row by row from the
    top-left.  Edge midpoints also touch four triangles, so the centre wins
    the maximal-nerve tie-break only through its label.
    """
    grid = [(x, y) for y in (0.0, 1.0, 2.0) for x in (0.0, 1.0, 2.0)]
    pts = [grid[4]] + grid[:4] + grid[5:]
    tris = [
        (0, 2, 5), (0, 5, 7), (0, 4, 7), (0, 2, 4),  # around the centre
        (1, 2, 4), (2, 3, 5), (5, 7, 8), (4, 6, 7),  # corners
    ]
    return Mesh(tuple(Keypoint(x, y) for x, y in pts), tuple(tris))


def grid_nerve_complex() -> Complex:
    return grid_nerve_mesh().to_complex()


def two_component_complex() -> Complex:
    """Two fans that share no vertex; object spaces around them are disjoint."""
    return build_complex([(0, 1, 2), (0, 2, 3), (10, 11, 12), (10, 12, 13), (10, 13, 14)], Kind.ORDERED)
