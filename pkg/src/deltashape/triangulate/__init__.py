from .keypoints import Keypoint, detect_keypoints, gradient_magnitude
from .delaunay import Mesh, delaunay, edge_key
from .curvilinear import CurvedMesh, curvilinear, edge_control_indices, hull_containment

__all__ = [
    "Keypoint",
    "detect_keypoints",
    "gradient_magnitude",
    "Mesh",
    "delaunay",
    "edge_key",
    "CurvedMesh",
    "curvilinear",
    "edge_control_indices",
    "hull_containment",
]
