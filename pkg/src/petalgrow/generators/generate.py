from __future__ import annotations

import numpy as np
from loguru import logger

from ..mesh import Mesh, build_mesh, vertex_normals
from .models import GeneratorSpec
from .surfaces import (
    annulus_surface,
    disk_surface,
    moebius_surface,
    punctured_torus_surface,
    torus_surface,
)

__all__ = 'generate_initial', 'torus'


def generate_initial(spec: GeneratorSpec) -> Mesh:
    """
    Build the initial surface described by `spec`.

    Vertices are displaced along their normals by seeded uniform noise in
    `[-a, a]` with `a = spec.perturbation * mean edge length`.
    """
    if spec.kind == 'disk':
        positions, triangles = disk_surface(spec.radius, spec.radial, spec.angular)
    elif spec.kind == 'annulus':
        positions, triangles = annulus_surface(
            spec.inner_radius, spec.radius, spec.radial, spec.angular
        )
    elif spec.kind == 'moebius-like':
        positions, triangles = moebius_surface(
            spec.radius, spec.width, spec.radial, spec.angular
        )
    else:
        positions, triangles = punctured_torus_surface(
            spec.radius, spec.tube_radius, spec.angular
        )

    mesh = build_mesh(positions, triangles)
    mesh.positions[:] *= spec.edge_length / mesh.mean_edge_length()
    if spec.perturbation > 0.0:
        _perturb(mesh, spec)

    logger.debug(
        f'Generated {spec.kind} surface: {mesh.vertex_count} vertices, '
        f'{mesh.face_count} faces (seed {spec.seed})'
    )
    return mesh


def _perturb(mesh: Mesh, spec: GeneratorSpec) -> None:
    amplitude = spec.perturbation * mesh.mean_edge_length()
    rng = np.random.default_rng(spec.seed)
    handles = mesh.vertex_handles()
    normals = vertex_normals(mesh)[handles]
    offsets = normals * rng.uniform(-amplitude, amplitude, len(handles))[:, None]

    if spec.kind == 'moebius-like':
        # the seam columns must stay on top of each other
        rows = spec.radial
        last = spec.angular * rows
        offsets[last : last + rows] = offsets[rows - 1 :: -1]

    mesh.positions[handles] += offsets


def torus(radius: float = 1.0, tube_radius: float = 0.25, segments: int = 48) -> Mesh:
    """Closed torus, unperturbed."""
    positions, triangles = torus_surface(radius, tube_radius, segments)
    return build_mesh(positions, triangles)
