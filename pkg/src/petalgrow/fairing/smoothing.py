"""
Jacobi-style smoothing.

Interior vertices move toward the weighted mean of the circumcenters of the
faces around them (barycenters for faces touching the boundary); boundary
vertices move toward the midpoint of their two boundary neighbours.  All
targets are computed from the positions at entry.
"""
from __future__ import annotations

from typing import Iterable, Tuple

import numpy as np

from ..mesh import Mesh, boundary_classification, circumcenters, triangle_areas
from .exceptions import MalformedBoundaryError

__all__ = (
    'interior_targets',
    'boundary_targets',
    'smooth_interior',
    'smooth_boundary',
    'smooth_subset',
)


def interior_targets(
    mesh: Mesh, t: float = 1e-8, eps_area: float = 1e-12
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Handle-indexed smoothing targets and the interior vertex mask.

    Rows of boundary and dead vertices hold their current position.
    """
    pos = mesh.positions
    flags = boundary_classification(mesh)
    tris = mesh.face_array()
    faces = mesh.face_handles()

    centers, radii = circumcenters(pos, tris, eps_area)
    bary = pos[tris].mean(axis=1)
    on_boundary = flags.faces[faces]
    anchor = np.where(on_boundary[:, None], bary, centers)
    area = np.maximum(triangle_areas(pos, tris), max(eps_area, 1e-300))
    weight = (radii ** 2 + t) / area

    num = np.zeros((mesh.num_vertex_slots, 3))
    den = np.zeros(mesh.num_vertex_slots)
    for k in range(3):
        np.add.at(num, tris[:, k], weight[:, None] * anchor)
        np.add.at(den, tris[:, k], weight)

    interior = np.zeros(mesh.num_vertex_slots, dtype=bool)
    interior[mesh.vertex_handles()] = True
    interior &= ~flags.vertices
    interior &= den > 0.0

    targets = pos.copy()
    targets[interior] = num[interior] / den[interior, None]
    return targets, interior


def boundary_targets(mesh: Mesh) -> Tuple[np.ndarray, np.ndarray]:
    """Handle-indexed boundary midpoint targets and the boundary vertex mask."""
    pos = mesh.positions
    targets = pos.copy()
    mask = np.zeros(mesh.num_vertex_slots, dtype=bool)
    for v in mesh.vertex_handles().tolist():
        if not mesh.is_boundary_vertex(v):
            continue
        prev, nxt = mesh.boundary_neighbors(v)
        if prev == nxt or v in (prev, nxt):
            raise MalformedBoundaryError(
                f'boundary vertex {v} lacks two distinct boundary neighbours'
            )
        targets[v] = 0.5 * (pos[prev] + pos[nxt])
        mask[v] = True
    return targets, mask


def smooth_interior(
    mesh: Mesh, alpha: float, t: float = 1e-8, eps_area: float = 1e-12
) -> None:
    if alpha == 0.0:
        return
    targets, interior = interior_targets(mesh, t, eps_area)
    pos = mesh.positions
    pos[interior] = (1.0 - alpha) * pos[interior] + alpha * targets[interior]


def smooth_boundary(mesh: Mesh, beta: float) -> None:
    if beta == 0.0:
        return
    targets, mask = boundary_targets(mesh)
    pos = mesh.positions
    pos[mask] = (1.0 - beta) * pos[mask] + beta * targets[mask]


def smooth_subset(
    mesh: Mesh,
    vertices: Iterable[int],
    alpha: float,
    t: float = 1e-8,
    eps_area: float = 1e-12,
    *,
    beta: float = 0.0,
) -> None:
    chosen = np.zeros(mesh.num_vertex_slots, dtype=bool)
    members = [v for v in vertices if mesh.is_vertex_alive(v)]
    if not members:
        return
    chosen[members] = True

    pos = mesh.positions
    inner_targets, interior = interior_targets(mesh, t, eps_area)
    outer_targets = pos
    boundary = np.zeros_like(chosen)
    if beta != 0.0:
        outer_targets, boundary = boundary_targets(mesh)

    inner = chosen & interior
    outer = chosen & boundary
    moved_inner = (1.0 - alpha) * pos[inner] + alpha * inner_targets[inner]
    moved_outer = (1.0 - beta) * pos[outer] + beta * outer_targets[outer]
    pos[inner] = moved_inner
    pos[outer] = moved_outer
