"""Curvilinear triangulation of image shapes with spoke-complex proximity analysis."""

from .bspline import (
    BSplineCurve,
    KnotVector,
    basis,
    basis_table,
    clamped_uniform_knots,
    continuity_class,
    eval_curve,
    sample_curve,
)
from .complex import Cell, Complex, Kind, as_delta, build_complex, face, glue, is_valid, sew
from .errors import (
    ChainError,
    ConfigurationError,
    ConsistencyError,
    ConstructionError,
    DegeneracyError,
    DeltaShapeError,
    DimensionError,
    DomainError,
    EmptinessError,
    ExtractionError,
    InsufficientKeypointsError,
    KindViolationError,
)
from .nerve import (
    ObjectSpace,
    SpokeDecomposition,
    max_nerve_cluster,
    max_nerve_clusters,
    nerve,
    object_space,
    spoke_chain,
    spoke_complex,
    spoke_decomposition,
)
from .pipeline import PipelineConfig, PipelineResult, run_pipeline
from .proximity import (
    FeatureVector,
    Region,
    ShapeRegion,
    TriangleFeatures,
    descriptive_near,
    graded_strong_near,
    lodato_near,
    strong_near,
)
from .render import render_svg
from .theorems import TheoremReport, theorem_suite
from .triangulate import (
    CurvedMesh,
    Keypoint,
    Mesh,
    curvilinear,
    delaunay,
    detect_keypoints,
    hull_containment,
)

__version__ = "0.1.0"

__all__ = [
    "BSplineCurve",
    "KnotVector",
    "basis",
    "basis_table",
    "clamped_uniform_knots",
    "continuity_class",
    "eval_curve",
    "sample_curve",
    "Cell",
    "Complex",
    "Kind",
    "as_delta",
    "build_complex",
    "face",
    "glue",
    "is_valid",
    "sew",
    "ChainError",
    "ConfigurationError",
    "ConsistencyError",
    "ConstructionError",
    "DegeneracyError",
    "DeltaShapeError",
    "DimensionError",
    "DomainError",
    "EmptinessError",
    "ExtractionError",
    "InsufficientKeypointsError",
    "KindViolationError",
    "ObjectSpace",
    "SpokeDecomposition",
    "max_nerve_cluster",
    "max_nerve_clusters",
    "nerve",
    "object_space",
    "spoke_chain",
    "spoke_complex",
    "spoke_decomposition",
    "PipelineConfig",
    "PipelineResult",
    "run_pipeline",
    "FeatureVector",
    "Region",
    "ShapeRegion",
    "TriangleFeatures",
    "descriptive_near",
    "graded_strong_near",
    "lodato_near",
    "strong_near",
    "render_svg",
    "TheoremReport",
    "theorem_suite",
    "CurvedMesh",
    "Keypoint",
    "Mesh",
    "curvilinear",
    "delaunay",
    "detect_keypoints",
    "hull_containment",
]
