from __future__ import annotations

import numpy as np
from loguru import logger

from ..growth import GrowthField
from ..mesh import Mesh
from ..shell import ForceField, RestState
from .exceptions import InvalidColliderError
from .spatial_index import SpatialIndex

__all__ = ('growth_collision',)


def growth_collision(
    mesh: Mesh,
    rest: RestState,
    field: GrowthField,
    k: float = 2.0,
    g_min: float = 0.1,
) -> ForceField:
    """
    Spherical repulsion between every pair of vertices closer than L0.

    Pairs where neither vertex reaches the growth threshold `g_min` are
    skipped; `g_min = 0` keeps every pair.
    """
    if not 0.0 <= g_min <= 1.0:
        raise InvalidColliderError(f'growth threshold must lie in [0, 1]: {g_min}')
    handles = mesh.vertex_handles()
    n = len(handles)
    forces = np.zeros((n, 3))
    if n < 2:
        return ForceField(handles=handles, forces=forces)

    radius = rest.rest_length
    pos = mesh.positions[handles]
    g = field.by_slot(mesh.num_vertex_slots)[handles]
    i, j = SpatialIndex(pos, radius).candidate_pairs(radius)
    d = pos[j] - pos[i]
    dist = np.linalg.norm(d, axis=1)
    keep = (dist < radius) & (np.maximum(g[i], g[j]) >= g_min)
    i, j, d, dist = i[keep], j[keep], d[keep], dist[keep]

    direction = np.zeros_like(d)
    ok = dist > 0.0
    direction[ok] = d[ok] / dist[ok, None]
    direction[~ok] = (1.0, 0.0, 0.0)
    coincident = int(np.count_nonzero(~ok))
    if coincident:
        logger.warning(f'{coincident} coincident vertex pairs separated along +x')

    f = (k * (radius - dist))[:, None] * direction
    np.add.at(forces, i, -f)
    np.add.at(forces, j, f)
    return ForceField(handles=handles, forces=forces, skipped=coincident)
