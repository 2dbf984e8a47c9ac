from __future__ import annotations

import numpy as np
from loguru import logger
from ordered_set import OrderedSet

from ..mesh import IsolatedVertexError, Mesh, vertex_normals
from .exceptions import InvalidColliderError
from .models import ColliderSet, CollisionOutcome
from .spatial_index import SpatialIndex
from .typing import PairMode

__all__ = 'build_colliders', 'penetration', 'corrective_collision'


def build_colliders(
    mesh: Mesh,
    rest_length: float,
    normal_factor: float = 0.25,
    tangent_factor: float = 0.9,
) -> ColliderSet:
    if not (normal_factor > 0.0 and tangent_factor > 0.0 and rest_length > 0.0):
        raise InvalidColliderError(
            f'collider radii must be positive: {normal_factor}, {tangent_factor}'
        )
    handles = mesh.vertex_handles()
    normals = vertex_normals(mesh)[handles]

    pos = mesh.positions
    tangent = np.empty(len(handles))
    for i, v in enumerate(handles.tolist()):
        if not mesh.vertex_faces(v):
            raise IsolatedVertexError(f'vertex {v} has no incident face')
        nbrs = mesh.neighbors(v)
        lengths = np.linalg.norm(pos[nbrs] - pos[v], axis=1)
        tangent[i] = tangent_factor * float(np.median(lengths))

    return ColliderSet(
        handles=handles,
        normal_radii=np.full(len(handles), normal_factor * rest_length),
        tangent_radii=np.maximum(tangent, 1e-12 * rest_length),
        normals=normals,
    )


def penetration(
    d: np.ndarray,
    normals: np.ndarray,
    normal_radii: np.ndarray,
    tangent_radii: np.ndarray,
) -> np.ndarray:
    """
    Ellipsoidal overlap measure of separations `d` seen along `normals`.

    Values below 1 mean the pair overlaps.
    """
    along = np.einsum('ij,ij->i', d, normals)
    dn = along[:, None] * normals
    dt = d - dn
    return (
        np.einsum('ij,ij->i', dn, dn) / normal_radii ** 2
        + np.einsum('ij,ij->i', dt, dt) / tangent_radii ** 2
    )


def _directions(d: np.ndarray) -> np.ndarray:
    dist = np.linalg.norm(d, axis=1)
    out = np.zeros_like(d)
    ok = dist > 0.0
    out[ok] = d[ok] / dist[ok, None]
    out[~ok] = (1.0, 0.0, 0.0)
    return out


def corrective_collision(
    mesh: Mesh,
    colliders: ColliderSet,
    k: float = 0.5,
    blend: float = 0.5,
    pair_mode: PairMode = 'symmetric',
) -> CollisionOutcome:
    handles = colliders.handles
    n = len(handles)
    zeros = np.zeros((n, 3))
    reach = colliders.reach
    if n < 2 or reach <= 0.0:
        return CollisionOutcome(handles, zeros, zeros.copy(), (), 0)

    pos = mesh.positions[handles]
    index = SpatialIndex(pos, reach)
    i, j = index.pairs(reach)

    # edge-connected pairs never collide
    remap = np.full(mesh.num_vertex_slots, -1, dtype=np.int64)
    remap[handles] = np.arange(n)
    ends = remap[mesh.edge_array()]
    edge_keys = np.minimum(ends[:, 0], ends[:, 1]) * n + np.maximum(ends[:, 0], ends[:, 1])
    keep = ~np.isin(i * n + j, edge_keys)
    i, j = i[keep], j[keep]

    d = pos[j] - pos[i]
    rn = np.maximum(colliders.normal_radii[i], colliders.normal_radii[j])
    rt = np.maximum(colliders.tangent_radii[i], colliders.tangent_radii[j])
    direction = _directions(d)
    coincident = int(np.count_nonzero(np.einsum('ij,ij->i', d, d) == 0.0))
    if coincident:
        logger.warning(f'{coincident} coincident vertex pairs separated along +x')

    raw = np.zeros((n, 3))
    hit = np.zeros(len(i), dtype=bool)
    # the separation is sign-free in the overlap measure, so the reversed
    # order only swaps which normal is used
    orders = [colliders.normals[i]]
    if pair_mode == 'both-orders':
        orders.append(colliders.normals[j])
    events = 0
    for normals in orders:
        p = penetration(d, normals, rn, rt)
        active = p < 1.0
        f = (k * (1.0 - p[active]))[:, None] * direction[active]
        np.add.at(raw, i[active], -f)
        np.add.at(raw, j[active], f)
        hit |= active
        events += int(np.count_nonzero(active))

    involved = OrderedSet(
        sorted(set(i[hit].tolist()) | set(j[hit].tolist()))
    )
    forces = np.zeros((n, 3))
    if involved:
        members = np.asarray(list(involved), dtype=np.int64)
        total = np.zeros((n, 3))
        count = np.zeros(n)
        np.add.at(total, ends[:, 0], raw[ends[:, 1]])
        np.add.at(total, ends[:, 1], raw[ends[:, 0]])
        np.add.at(count, ends[:, 0], 1.0)
        np.add.at(count, ends[:, 1], 1.0)
        mean = total[members] / np.maximum(count[members], 1.0)[:, None]
        forces[members] = (1.0 - blend) * raw[members] + blend * mean
        logger.debug(f'{events} collision events over {len(members)} vertices')

    return CollisionOutcome(
        handles=handles,
        raw_forces=raw,
        forces=forces,
        involved=tuple(int(handles[m]) for m in involved),
        events=events,
        coincident=coincident,
    )
