from __future__ import annotations

import numpy as np
from loguru import logger
from ordered_set import OrderedSet

from ..mesh import DeadHandleError, Mesh
from .exceptions import EmptyBoundaryError, InvalidParamsError
from .models import SourcePolicy, SourceSet

__all__ = ('select_sources',)


def select_sources(mesh: Mesh, policy: SourcePolicy) -> SourceSet:
    if policy.kind == 'explicit':
        chosen: OrderedSet[int] = OrderedSet()
        for v in policy.vertices:
            if not mesh.is_vertex_alive(v):
                raise DeadHandleError(f'source vertex {v} is not alive')
            chosen.add(int(v))
        if not chosen:
            raise InvalidParamsError('explicit source policy without vertices')
        return SourceSet(vertices=tuple(chosen), policy=policy)

    boundary = [v for v in mesh.vertices() if mesh.is_boundary_vertex(v)]
    if not boundary:
        raise EmptyBoundaryError('the mesh has no boundary vertex to grow from')

    if policy.kind == 'all-boundary':
        return SourceSet(vertices=tuple(boundary), policy=policy)

    if policy.kind == 'random-boundary':
        if policy.count < 1:
            raise InvalidParamsError(f'source count must be positive: {policy.count}')
        rng = np.random.default_rng(policy.seed)
        size = min(policy.count, len(boundary))
        picked = rng.choice(len(boundary), size=size, replace=False)
        vertices = tuple(boundary[i] for i in sorted(picked.tolist()))
        logger.debug(f'Random growth sources: {vertices}')
        return SourceSet(vertices=vertices, policy=policy)

    raise InvalidParamsError(f'unknown source policy: {policy.kind}')
