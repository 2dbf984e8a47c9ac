from __future__ import annotations

import math

import numpy as np
from loguru import logger

from ..mesh import EditRefusedError, Mesh
from .models import PassResult

__all__ = 'opposite_angle_sum', 'delaunay_flip_pass'

ANGLE_EPSILON = 1e-9


def _corner_angle(apex: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    da = a - apex
    db = b - apex
    return math.atan2(float(np.linalg.norm(np.cross(da, db))), float(da @ db))


def opposite_angle_sum(mesh: Mesh, e: int) -> float:
    """Sum of the two corner angles facing an interior edge."""
    pos = mesh.positions
    h = 2 * e
    u = pos[mesh.origin(h)]
    v = pos[mesh.dest(h)]
    w = pos[mesh.origin(mesh.prev(h))]
    x = pos[mesh.origin(mesh.prev(h + 1))]
    return _corner_angle(w, u, v) + _corner_angle(x, v, u)


def delaunay_flip_pass(mesh: Mesh, eps: float = ANGLE_EPSILON) -> PassResult:
    flips = refused = 0
    for e in mesh.edge_handles().tolist():
        if mesh.is_boundary_edge(e):
            continue
        if opposite_angle_sum(mesh, e) <= math.pi + eps:
            continue
        try:
            mesh.flip_edge(e)
        except EditRefusedError as exc:
            refused += 1
            logger.trace(f'Flip refused: {exc}')
        else:
            flips += 1
    if flips or refused:
        logger.debug(f'Flipped {flips} edges, {refused} refused')
    return PassResult(applied=flips, refused=refused)
