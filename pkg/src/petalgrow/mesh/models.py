from __future__ import annotations

from typing import NewType

import attr
import numpy as np

__all__ = (
    'VertexId',
    'EdgeId',
    'FaceId',
    'HalfEdgeId',
    'BOUNDARY',
    'FaceGeometry',
    'BoundaryFlags',
)

VertexId = NewType('VertexId', int)
EdgeId = NewType('EdgeId', int)
FaceId = NewType('FaceId', int)
HalfEdgeId = NewType('HalfEdgeId', int)

# face marker of half-edges lying on the boundary
BOUNDARY = -1


@attr.s(auto_attribs=True, slots=True, frozen=True)
class FaceGeometry:
    barycenter: np.ndarray
    circumcenter: np.ndarray
    circumradius: float
    area: float
    normal: np.ndarray
    quality: float


@attr.s(auto_attribs=True, slots=True, frozen=True)
class BoundaryFlags:
    # indexed by handle, False for dead handles
    vertices: np.ndarray
    edges: np.ndarray
    faces: np.ndarray
