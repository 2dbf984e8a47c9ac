from __future__ import annotations

import numpy as np
from loguru import logger

from ..growth import GrowthField
from ..mesh import Mesh
from ..shell import RestState
from .models import SubdivisionOutcome
from .typing import InteriorSplit, SplitLengthMode

__all__ = 'split_thresholds', 'split_position', 'subdivide_pass'


def split_thresholds(
    lengths: np.ndarray,
    mean_growth: np.ndarray,
    rest_length: float,
    k: float = 1.0,
    length_mode: SplitLengthMode = 'rest',
) -> np.ndarray:
    reference = rest_length if length_mode == 'rest' else lengths
    return k * reference / (1.0 + mean_growth)


def split_position(
    mesh: Mesh, e: int, interior_split: InteriorSplit = 'loop'
) -> np.ndarray:
    pos = mesh.positions
    u, v = mesh.edge_vertices(e)
    mid = 0.5 * (pos[u] + pos[v])
    if interior_split == 'midpoint' or mesh.is_boundary_edge(e):
        return mid
    w = mesh.origin(mesh.prev(2 * e))
    x = mesh.origin(mesh.prev(2 * e + 1))
    return 0.375 * (pos[u] + pos[v]) + 0.125 * (pos[w] + pos[x])


def subdivide_pass(
    mesh: Mesh,
    field: GrowthField,
    rest: RestState,
    k: float = 1.0,
    *,
    length_mode: SplitLengthMode = 'rest',
    interior_split: InteriorSplit = 'loop',
) -> SubdivisionOutcome:
    """
    Split every edge that is too long for its growth factor.

    Candidates, split positions and inherited growth factors are all taken
    from the mesh as it is at the start of the pass; edges created by the
    pass are not revisited.
    """
    edges = mesh.edge_handles()
    ends = mesh.edge_array()
    g = field.by_slot(mesh.num_vertex_slots)
    mean_growth = 0.5 * (g[ends[:, 0]] + g[ends[:, 1]])
    lengths = mesh.edge_lengths()
    thresholds = split_thresholds(
        lengths, mean_growth, rest.rest_length, k, length_mode
    )
    selected = np.flatnonzero(lengths > thresholds)

    plan = [
        (int(edges[i]), split_position(mesh, int(edges[i]), interior_split))
        for i in selected
    ]
    inherited = mean_growth[selected]

    new_vertices = np.fromiter(
        (mesh.split_edge(e, p) for e, p in plan), dtype=np.int64, count=len(plan)
    )
    if len(plan):
        logger.debug(f'Split {len(plan)} of {len(edges)} edges')
    return SubdivisionOutcome(
        applied=len(plan),
        new_vertices=new_vertices,
        field=field.extended(new_vertices, inherited),
    )
