"""End-to-end driver: image -> keypoints -> Delaunay -> splines -> maximal nerve -> spokes."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .complex import Complex
from .errors import ConfigurationError
from .imageio import dump_json, load_grayscale, to_unit_range
from .nerve import SpokeDecomposition, max_nerve_clusters, spoke_decomposition
from .render import render_svg
from .triangulate import CurvedMesh, Keypoint, Mesh, curvilinear, delaunay, detect_keypoints

__all__ = ["PipelineConfig", "PipelineResult", "run_pipeline"]

MODES = ("rect", "curve", "both")
HIGHLIGHTS = ("nerve", "spokes", "chain", "none")


@dataclass(frozen=True)
class PipelineConfig:
    max_keypoints: int = 100
    nms_radius: float = 8.0
    spline_degree: int | None = None  # None: 2 on boundary edges, 3 on shared edges
    interior_weight: float = 1.0
    samples_per_edge: int = 32
    mode: str = "both"
    highlight: str = "spokes"

    def validate(self) -> "PipelineConfig":
        problems = []
        if self.max_keypoints < 3:
            problems.append("max_keypoints must be at least 3")
        if not self.nms_radius >= 0:
            problems.append("nms_radius must be non-negative")
        if self.spline_degree is not None and self.spline_degree < 2:
            problems.append("spline_degree must be at least 2")
        if not self.interior_weight > 0:
            problems.append("interior_weight must be positive")
        if self.samples_per_edge < 2:
            problems.append("samples_per_edge must be at least 2")
        if self.mode not in MODES:
            problems.append(f"mode must be one of {MODES}")
        if self.highlight not in HIGHLIGHTS:
            problems.append(f"highlight must be one of {HIGHLIGHTS}")
        if problems:
            raise ConfigurationError("; ".join(problems))
        return self


@dataclass
class PipelineResult:
    image: np.ndarray
    keypoints: list[Keypoint]
    mesh: Mesh
    curved: CurvedMesh
    complex: Complex
    nucleus: int
    ties: list[int]
    decomposition: SpokeDecomposition
    svg: str
    config: PipelineConfig

    def mesh_json(self) -> str:
        return dump_json(self.curved.to_dict())

    def decomposition_json(self) -> str:
        data = self.complex.to_dict()
        data.update(self.decomposition.to_dict())
        data["max_nerve_size"] = len(self.decomposition.levels[1]) if self.decomposition.depth else 0
        data["max_nerve_ties"] = self.ties
        data["config"] = asdict(self.config)
        return dump_json(data)

    def write(self, out_dir: str | Path) -> dict[str, Path]:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        paths = {
            "mesh": out / "mesh.json",
            "decomposition": out / "decomposition.json",
            "svg": out / "overlay.svg",
        }
        paths["mesh"].write_text(self.mesh_json(), encoding="utf-8")
        paths["decomposition"].write_text(self.decomposition_json(), encoding="utf-8")
        paths["svg"].write_text(self.svg, encoding="utf-8")
        return paths


def run_pipeline(image, config: PipelineConfig | None = None, out_dir: str | Path | None = None) -> PipelineResult:
    """Run every stage on ``image`` (a path or a 2-D array) and optionally write the artifacts."""
    config = (config or PipelineConfig()).validate()
    img = load_grayscale(image) if isinstance(image, (str, Path)) else to_unit_range(image)
    if img.ndim != 2:
        raise ConfigurationError("expected a single-channel image")

    keypoints = detect_keypoints(img, config.max_keypoints, config.nms_radius)
    mesh = delaunay(keypoints)
    curved = curvilinear(mesh, config.interior_weight, config.spline_degree)
    K = mesh.to_complex()
    _, ties = max_nerve_clusters(K)
    nucleus = ties[0]
    dec = spoke_decomposition(K, nucleus)
    svg = render_svg(
        mesh,
        curved,
        dec,
        mode=config.mode,
        highlight=config.highlight,
        samples_per_edge=config.samples_per_edge,
        image=img,
    )
    result = PipelineResult(img, keypoints, mesh, curved, K, nucleus, ties, dec, svg, config)
    if out_dir is not None:
        result.write(out_dir)
    return result
