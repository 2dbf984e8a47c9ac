from .exceptions import (
    BoundaryEdgeError,
    DanglingIndexError,
    DeadHandleError,
    DegenerateFaceError,
    EdgeExistsError,
    EditRefusedError,
    FoldOverError,
    InconsistentOrientationError,
    IsolatedVertexError,
    LinkConditionViolation,
    MeshError,
    MeshInputError,
    MeshValidationError,
    NonConvexQuadError,
    NonManifoldInputError,
    NotAnEarTipError,
    ObjParseError,
    WouldBreakBoundaryError,
)
from .geometry import (
    area_epsilon,
    boundary_classification,
    circumcenters,
    dihedral_angle,
    dihedral_angles,
    face_geometry,
    face_qualities,
    hinge_angles,
    triangle_areas,
    triangle_normals,
    vertex_normal,
    vertex_normals,
)
from .halfedge import Mesh, build_mesh
from .io import format_obj, load_obj, parse_obj, save_obj
from .models import BOUNDARY, BoundaryFlags, FaceGeometry
from .validation import is_valid_mesh, mesh_problem, validate_mesh

__all__ = (
    'Mesh',
    'build_mesh',
    'BOUNDARY',
    'BoundaryFlags',
    'FaceGeometry',

    'area_epsilon',
    'boundary_classification',
    'circumcenters',
    'dihedral_angle',
    'dihedral_angles',
    'face_geometry',
    'face_qualities',
    'hinge_angles',
    'triangle_areas',
    'triangle_normals',
    'vertex_normal',
    'vertex_normals',

    'validate_mesh',
    'is_valid_mesh',
    'mesh_problem',

    'parse_obj',
    'load_obj',
    'format_obj',
    'save_obj',

    'MeshError',
    'MeshInputError',
    'NonManifoldInputError',
    'InconsistentOrientationError',
    'DanglingIndexError',
    'DeadHandleError',
    'DegenerateFaceError',
    'IsolatedVertexError',
    'MeshValidationError',
    'ObjParseError',
    'EditRefusedError',
    'BoundaryEdgeError',
    'NonConvexQuadError',
    'EdgeExistsError',
    'LinkConditionViolation',
    'WouldBreakBoundaryError',
    'FoldOverError',
    'NotAnEarTipError',
)
