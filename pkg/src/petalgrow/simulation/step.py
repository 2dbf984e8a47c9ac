"""
One simulation step.

Phases run in a fixed order:

1. connectivity upkeep: Delaunay flips, short-edge collapses, ear removal
2. growth sources, geodesic distances and growth factors
3. growth-driven subdivision
4. forces and the overdamped position update
5. interior then boundary smoothing
6. corrective collision, then smoothing of the uninvolved 1-ring neighbours
"""
from __future__ import annotations

import time
from typing import List, Optional

import attr
import numpy as np
from loguru import logger
from ordered_set import OrderedSet

from ..analysis import detect_failure
from ..collision import (
    CollisionError,
    build_colliders,
    corrective_collision,
    growth_collision,
)
from ..fairing import FairingError, smooth_boundary, smooth_interior, smooth_subset
from ..growth import (
    GrowthError,
    SourceSet,
    geodesic_distances,
    growth_factors,
    select_sources,
)
from ..mesh import Mesh, MeshError, area_epsilon
from ..remesh import (
    collapse_pass,
    delaunay_flip_pass,
    ear_removal_pass,
    subdivide_pass,
)
from ..setting import SimConfig
from ..shell import (
    ShellError,
    bending_forces,
    external_forces,
    integrate,
    stretch_forces,
)
from .exceptions import StepFailure
from .models import SimState, StepReport
from .schedule import bending_coefficient

__all__ = 'step', 'current_sources'


def current_sources(
    state: SimState, config: SimConfig, number: Optional[int] = None
) -> SourceSet:
    """
    Growth sources for step `number`, by default the one after `state.step`.

    Boundary-wide sources are reselected every step so that new boundary
    vertices join; other policies keep their selection while any of its
    vertices is alive.
    """
    mesh = state.mesh
    policy = config.sources()
    if policy.kind == 'all-boundary' or state.sources is None:
        return select_sources(mesh, policy)

    alive = tuple(v for v in state.sources.vertices if mesh.is_vertex_alive(v))
    if len(alive) == len(state.sources):
        return state.sources
    if alive:
        return SourceSet(vertices=alive, policy=policy)
    if policy.kind == 'random-boundary':
        logger.debug('All random growth sources were removed, reselecting')
        return select_sources(mesh, policy)
    if number is None:
        number = state.step + 1
    raise StepFailure('every explicit growth source was removed', number)


def _collision_neighbours(mesh: Mesh, involved: OrderedSet[int]) -> List[int]:
    neighbours: OrderedSet[int] = OrderedSet()
    for v in involved:
        for u in mesh.neighbors(v):
            if u not in involved:
                neighbours.add(u)
    return sorted(neighbours)


def step(state: SimState, config: SimConfig) -> StepReport:
    mesh = state.mesh
    number = state.step + 1
    rest_length = state.rest_length
    eps_area = area_epsilon(rest_length)
    tolerance = config.smoothing_tolerance * rest_length ** 2
    k_b = bending_coefficient(state.schedule, state.step)
    rest = attr.evolve(state.rest, bending_stiffness=k_b)
    start = time.perf_counter()
    # counted before any phase can fail
    state.step = number

    try:
        flips = delaunay_flip_pass(mesh)
        collapses = collapse_pass(mesh, config.collapse_factor * rest_length)
        ears = ear_removal_pass(mesh)

        sources = current_sources(state, config, number)
        distances = geodesic_distances(mesh, sources, config.geodesic_solver)
        field = growth_factors(distances, config.growth_params(), mesh.vertex_handles())

        outcome = subdivide_pass(
            mesh,
            field,
            rest,
            config.split_factor,
            length_mode=config.split_length_mode,
            interior_split=config.interior_split,
        )
        field = outcome.field

        if config.method == 'shell':
            total = stretch_forces(mesh, rest) + bending_forces(mesh, rest)
        else:
            total = growth_collision(
                mesh,
                rest,
                field,
                k=config.growth_collision_stiffness,
                g_min=config.growth_collision_threshold,
            )
        spec = config.external_force_spec()
        if not spec.is_zero:
            total = total + external_forces(mesh, field, spec)
        integrate(mesh, total, config.dt)

        smooth_interior(mesh, config.smoothing_alpha, tolerance, eps_area)
        smooth_boundary(mesh, config.smoothing_beta)

        events = 0
        if config.collision_enabled:
            colliders = build_colliders(
                mesh,
                rest_length,
                config.collision_normal_factor,
                config.collision_tangent_factor,
            )
            collision = corrective_collision(
                mesh,
                colliders,
                config.collision_stiffness,
                config.collision_blend,
                config.collision_pair_mode,
            )
            events = collision.events
            if collision.involved:
                # collision forces are displacements, no time step
                mesh.positions[collision.handles] += collision.forces
                involved = OrderedSet(collision.involved)
                smooth_subset(
                    mesh,
                    _collision_neighbours(mesh, involved),
                    config.smoothing_alpha,
                    tolerance,
                    eps_area,
                    beta=config.smoothing_beta,
                )
    except (ShellError, MeshError, GrowthError, CollisionError, FairingError) as exc:
        raise StepFailure(f'{type(exc).__name__}: {exc}', number) from exc

    state.sources = sources
    state.field = field

    if config.validate_every_step:
        status = detect_failure(mesh, rest_length)
        if not status:
            raise StepFailure(status.reason or 'failure', number)
    elif not np.all(np.isfinite(mesh.positions[mesh.vertex_handles()])):
        raise StepFailure('non-finite', number)

    report = StepReport(
        step=number,
        splits=outcome.applied,
        flips=flips.applied,
        collapses=collapses.applied,
        ears=ears.applied,
        collision_events=events,
        vertex_count=mesh.vertex_count,
        edge_count=mesh.edge_count,
        face_count=mesh.face_count,
        k_b=k_b,
        wall_ms=1000.0 * (time.perf_counter() - start),
        refused_flips=flips.refused,
        refused_collapses=collapses.refused,
    )
    state.reports.append(report)
    return report
