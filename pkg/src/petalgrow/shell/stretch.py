from __future__ import annotations

import numpy as np
from loguru import logger

from ..mesh import Mesh
from .models import ForceField, RestState

__all__ = 'stretch_forces', 'stretch_energy'


def stretch_forces(mesh: Mesh, rest: RestState) -> ForceField:
    """Hooke springs along every edge pulling lengths toward the rest length."""
    ends = mesh.edge_array()
    pos = mesh.positions
    d = pos[ends[:, 1]] - pos[ends[:, 0]]
    length = np.linalg.norm(d, axis=1)
    ok = length > 0.0
    skipped = int(np.count_nonzero(~ok))
    if skipped:
        logger.debug(f'Skipped {skipped} zero-length edges in stretch assembly')

    scale = rest.stretch_stiffness * (length[ok] - rest.rest_length) / length[ok]
    f = scale[:, None] * d[ok]
    acc = np.zeros((mesh.num_vertex_slots, 3))
    np.add.at(acc, ends[ok, 0], f)
    np.add.at(acc, ends[ok, 1], -f)
    return ForceField.from_slots(mesh.vertex_handles(), acc, skipped)


def stretch_energy(mesh: Mesh, rest: RestState) -> float:
    length = mesh.edge_lengths()
    return float(
        0.5 * rest.stretch_stiffness * np.sum((length - rest.rest_length) ** 2)
    )
