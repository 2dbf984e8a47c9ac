from __future__ import annotations

from typing import Optional

import numpy as np

from ..mesh import Mesh, dihedral_angles, face_qualities
from .failure import detect_failure
from .intersections import count_self_intersections
from .models import MetricsReport

__all__ = 'mean_valence', 'metrics'


def mean_valence(mesh: Mesh) -> float:
    if mesh.vertex_count == 0:
        return 0.0
    ends = mesh.edge_array()
    degree = np.bincount(ends.ravel(), minlength=mesh.num_vertex_slots)
    return float(degree[mesh.vertex_handles()].mean())


def metrics(
    mesh: Mesh,
    rest_length: Optional[float] = None,
    *,
    intersections: bool = True,
) -> MetricsReport:
    """
    Quality statistics of a mesh.

    Tolerances are relative to `rest_length`, which defaults to the mean edge
    length.  Counting self-intersections can be skipped for speed, the count
    is then reported as -1.
    """
    if rest_length is None:
        rest_length = mesh.mean_edge_length() or 1.0

    if mesh.face_count:
        mean_quality = float(face_qualities(mesh.positions, mesh.face_array()).mean())
    else:
        mean_quality = 0.0

    _, theta = dihedral_angles(mesh)
    sq = theta ** 2
    mean_sq = float(sq.mean()) if len(sq) else 0.0

    failure = detect_failure(mesh, rest_length)
    if intersections and failure.reason != 'non-finite':
        count = count_self_intersections(mesh, 1e-10 * rest_length)
    else:
        count = -1
    return MetricsReport(
        vertex_count=mesh.vertex_count,
        edge_count=mesh.edge_count,
        face_count=mesh.face_count,
        self_intersections=count,
        mean_quality=mean_quality,
        mean_valence=mean_valence(mesh),
        mean_sq_dihedral=mean_sq,
        sum_sq_dihedral=float(sq.sum()),
        failure=failure,
    )
