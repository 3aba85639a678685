"""Grayscale image loading and deterministic JSON output."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
from PIL import Image

__all__ = ["load_grayscale", "to_unit_range", "dump_json", "write_json"]


def to_unit_range(img: np.ndarray) -> np.ndarray:
    """Scale integer images to [0, 1]; float images are returned as float64."""
    img = np.asarray(img)
    if img.dtype == np.uint8:
        return img.astype(float) / 255.0
    if img.dtype == np.uint16:
        return img.astype(float) / 65535.0
    return img.astype(float)


def load_grayscale(path: str | Path) -> np.ndarray:
    """Read a PNG/PGM (or any Pillow-readable) file as a float image in [0, 1].

    Colour images are reduced to luma.
    """
    with Image.open(path) as im:
        im.load()
        if im.mode.startswith("I;16"):
            return np.asarray(im, dtype=float) / 65535.0
        if im.mode in ("I", "F"):
            arr = np.asarray(im, dtype=float)
            peak = arr.max()
            return arr / peak if peak > 0 else arr
        if im.mode != "L":
            im = im.convert("L")
        return np.asarray(im, dtype=float) / 255.0


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_json(path: str | Path, obj) -> None:
    Path(path).write_text(dump_json(obj), encoding="utf-8")
