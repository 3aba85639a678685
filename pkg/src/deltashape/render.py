"""
SVG 1.1 overlays of rectilinear and curvilinear meshes with spoke highlights.

Layer order, bottom to top: ``raster`` (optional image), ``spokes``,
``rectilinear``, ``curvilinear``, ``nucleus``, ``legend``.  Coordinates are
written with at most three decimals.
"""

from __future__ import annotations

import base64
import io
import xml.etree.ElementTree as ET

import numpy as np
from PIL import Image

from .bspline import sample_curve
from .complex import Cell
from .errors import ConsistencyError
from .nerve import SpokeDecomposition, spoke_chain

__all__ = ["render_svg", "LEVEL_COLORS", "fmt"]

SVG_NS = "http://www.w3.org/2000/svg"
XLINK_NS = "http://www.w3.org/1999/xlink"
ET.register_namespace("", SVG_NS)
ET.register_namespace("xlink", XLINK_NS)

# level 1 red, level 2 green, nucleus gold; later levels cycle through the rest
LEVEL_COLORS = ("#ffd700", "#e41a1c", "#4daf4a", "#377eb8", "#ff7f00", "#984ea3", "#a65628", "#f781bf")
NUCLEUS_COLOR = "#ffd700"


def fmt(v: float) -> str:
    s = f"{float(v):.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _el(parent, tag, **attrs):
    attrs = {k.rstrip("_").replace("_", "-"): str(v) for k, v in attrs.items()}
    return ET.SubElement(parent, f"{{{SVG_NS}}}{tag}", attrs)


def _png_data_uri(image: np.ndarray) -> str:
    arr = np.clip(np.asarray(image, dtype=float), 0.0, 1.0)
    buf = io.BytesIO()
    Image.fromarray(np.rint(arr * 255).astype(np.uint8), mode="L").save(buf, format="PNG")
    return "data:image/png;base64," + base64.b64encode(buf.getvalue()).decode("ascii")


def _highlight_cells(dec: SpokeDecomposition, highlight: str) -> list[tuple[int, Cell]]:
    if highlight == "none":
        return []
    if highlight == "nerve":
        levels = [1] if dec.depth >= 1 else []
        return [(1, c) for k in levels for c in sorted(dec.levels[k], key=Cell.sort_key)]
    if highlight == "spokes":
        return [(k, c) for k in range(1, dec.depth + 1) for c in sorted(dec.levels[k], key=Cell.sort_key)]
    if highlight == "chain":
        return [(k, c) for k, c in enumerate(spoke_chain(dec, dec.depth)) if k > 0]
    raise ValueError(f"unknown highlight {highlight!r}")


def render_svg(
    mesh,
    curved=None,
    decomposition: SpokeDecomposition | None = None,
    *,
    mode: str = "both",
    highlight: str = "spokes",
    samples_per_edge: int = 32,
    image: np.ndarray | None = None,
    size: tuple[int, int] | None = None,
) -> str:
    """Render ``mesh`` (and optionally its curved projection and a decomposition) to SVG text.

    ``mode`` selects straight edges (``"rect"``), spline edges (``"curve"``)
    or both.  ``size`` is ``(width, height)``; it defaults to the image
    shape, or the bounding box of the vertices.
    """
    if mode not in ("rect", "curve", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode in ("curve", "both") and curved is None:
        raise ConsistencyError("curvilinear layer requested without a curved mesh")
    if curved is not None and curved.base is not mesh and set(curved.base.triangles) != set(mesh.triangles):
        raise ConsistencyError("curved mesh is built on a different triangulation")
    tri_set = set(mesh.triangles)
    if decomposition is not None:
        stray = [c for lvl in decomposition.levels[1:] for c in lvl if c.vertices not in tri_set]
        if stray or not 0 <= decomposition.nucleus < len(mesh.vertices):
            raise ConsistencyError("decomposition does not belong to this mesh")

    pts = mesh.points
    if size is None:
        if image is not None:
            size = (image.shape[1], image.shape[0])
        else:
            size = (int(np.ceil(pts[:, 0].max())) + 1, int(np.ceil(pts[:, 1].max())) + 1)
    w, h = size
    root = ET.Element(
        f"{{{SVG_NS}}}svg",
        {"version": "1.1", "width": str(w), "height": str(h), "viewBox": f"0 0 {w} {h}"},
    )

    if image is not None:
        g = _el(root, "g", id="raster")
        img = _el(g, "image", x=0, y=0, width=w, height=h)
        img.set(f"{{{XLINK_NS}}}href", _png_data_uri(image))

    used_levels: list[int] = []
    if decomposition is not None:
        g = _el(root, "g", id="spokes", stroke="none", fill_opacity="0.45")
        for k, cell in _highlight_cells(decomposition, highlight):
            if k not in used_levels:
                used_levels.append(k)
            xy = pts[list(cell.vertices)]
            _el(
                g,
                "polygon",
                points=" ".join(f"{fmt(x)},{fmt(y)}" for x, y in xy),
                fill=LEVEL_COLORS[k % len(LEVEL_COLORS)],
                class_=f"level-{k}",
            )

    if mode in ("rect", "both"):
        g = _el(root, "g", id="rectilinear", stroke="#000000", stroke_width="0.6", fill="none")
        for a, b in mesh.edges:
            (x1, y1), (x2, y2) = pts[a], pts[b]
            _el(g, "line", x1=fmt(x1), y1=fmt(y1), x2=fmt(x2), y2=fmt(y2))

    if mode in ("curve", "both"):
        g = _el(root, "g", id="curvilinear", stroke="#1f3fbf", stroke_width="0.8", fill="none")
        for (a, b), curve in sorted(curved.edge_splines.items()):
            xy = sample_curve(curve, samples_per_edge)
            d = "M " + " L ".join(f"{fmt(x)},{fmt(y)}" for x, y in xy)
            _el(g, "path", d=d, id=f"edge-{a}-{b}")

    if decomposition is not None:
        g = _el(root, "g", id="nucleus")
        x, y = pts[decomposition.nucleus]
        r = max(2.0, 0.01 * max(w, h))
        tri = [(x, y - r), (x - 0.87 * r, y + 0.5 * r), (x + 0.87 * r, y + 0.5 * r)]
        _el(
            g,
            "polygon",
            points=" ".join(f"{fmt(px)},{fmt(py)}" for px, py in tri),
            fill=NUCLEUS_COLOR,
            stroke="#000000",
            stroke_width="0.5",
        )

    g = _el(root, "g", id="legend", font_family="sans-serif", font_size="10")
    entries = []
    if mode in ("rect", "both"):
        entries.append(("#000000", "rectilinear edges"))
    if mode in ("curve", "both"):
        entries.append(("#1f3fbf", "B-spline edges"))
    if decomposition is not None:
        entries.append((NUCLEUS_COLOR, f"nucleus {decomposition.nucleus}"))
        entries += [(LEVEL_COLORS[k % len(LEVEL_COLORS)], f"{k}-spokes") for k in used_levels]
    for i, (color, label) in enumerate(entries):
        y0 = 6 + 14 * i
        _el(g, "rect", x=6, y=y0, width=10, height=10, fill=color)
        t = _el(g, "text", x=20, y=y0 + 9)
        t.text = label

    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"
