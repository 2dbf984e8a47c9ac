from __future__ import annotations

import numpy as np

from ..mesh import Mesh, area_epsilon, mesh_problem, triangle_areas
from .models import FailureStatus

__all__ = ('detect_failure',)

# a degenerate face only signals a blow-up when some edge is this many L0 long
LONG_EDGE_FACTOR = 10.0


def detect_failure(mesh: Mesh, rest_length: float) -> FailureStatus:
    pos = mesh.positions[mesh.vertex_handles()]
    if not np.all(np.isfinite(pos)):
        return FailureStatus(failed=True, reason='non-finite')

    if mesh.face_count:
        areas = triangle_areas(mesh.positions, mesh.face_array())
        lengths = mesh.edge_lengths()
        if (
            np.any(areas < area_epsilon(rest_length))
            and lengths.max() > LONG_EDGE_FACTOR * rest_length
        ):
            return FailureStatus(failed=True, reason='degenerate-long-edge')

    problem = mesh_problem(mesh)
    if problem is not None:
        return FailureStatus(failed=True, reason=f'invalid-mesh: {problem}')
    return FailureStatus.ok()
