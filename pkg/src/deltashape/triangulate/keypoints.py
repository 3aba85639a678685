"""Gradient keypoints: Sobel magnitude maxima thinned by non-maximum suppression."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from ..errors import InsufficientKeypointsError

__all__ = ["Keypoint", "gradient_magnitude", "detect_keypoints"]


@dataclass(frozen=True)
class Keypoint:
    x: float
    y: float
    score: float = 0.0

    @property
    def xy(self) -> tuple[float, float]:
        return (self.x, self.y)


def gradient_magnitude(img: np.ndarray) -> np.ndarray:
    """3x3 Sobel gradient magnitude of a 2-D image (reflective borders)."""
    img = np.asarray(img, dtype=float)
    if img.ndim != 2 or img.size == 0:
        raise ValueError("expected a non-empty 2-D grayscale image")
    gx = ndimage.sobel(img, axis=1, mode="reflect")
    gy = ndimage.sobel(img, axis=0, mode="reflect")
    return np.hypot(gx, gy)


def detect_keypoints(img: np.ndarray, max_count: int = 100, nms_radius: float = 8.0) -> list[Keypoint]:
    """Pick up to ``max_count`` gradient maxima, strongest first.

    Candidates are pixels whose Sobel magnitude is positive and not exceeded
    within their 3x3 neighbourhood.  They are visited by descending score,
    then row, then column, and a candidate is kept when no kept keypoint lies
    within ``nms_radius`` pixels.  ``x`` is the column, ``y`` the row.
    """
    if max_count < 3:
        raise ValueError("max_count must be at least 3")
    mag = gradient_magnitude(img)
    peak = ndimage.maximum_filter(mag, size=3, mode="nearest")
    rows, cols = np.nonzero((mag > 0) & (mag >= peak))
    scores = mag[rows, cols]
    order = np.lexsort((cols, rows, -scores))

    kept: list[Keypoint] = []
    kept_xy = np.empty((0, 2))
    r2 = float(nms_radius) ** 2
    for k in order:
        xy = np.array([cols[k], rows[k]], dtype=float)
        if len(kept_xy) and np.min(np.sum((kept_xy - xy) ** 2, axis=1)) <= r2:
            continue
        kept.append(Keypoint(float(cols[k]), float(rows[k]), float(scores[k])))
        kept_xy = np.vstack([kept_xy, xy])
        if len(kept) == max_count:
            break
    if len(kept) < 3:
        raise InsufficientKeypointsError(f"found {len(kept)} keypoints, need at least 3")
    return kept
