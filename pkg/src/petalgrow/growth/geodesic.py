"""
Geodesic distance to the nearest growth source.

The graph solver runs multi-source Dijkstra over the edge graph weighted by
edge lengths.  The heat solver diffuses from the sources for a short time,
normalises the negative heat gradient and recovers the distance by a Poisson
solve; it is smoother but only approximately consistent along edges.
"""
from __future__ import annotations

import numpy as np
from loguru import logger
from scipy import sparse
from scipy.sparse import csgraph
from scipy.sparse.linalg import spsolve

from ..mesh import Mesh
from .exceptions import DisconnectedComponentWithoutSourceError, InvalidParamsError
from .models import SourceSet
from .typing import GeodesicSolver

__all__ = 'geodesic_distances', 'graph_distances', 'heat_distances'


def geodesic_distances(
    mesh: Mesh, sources: SourceSet, solver: GeodesicSolver = 'graph'
) -> np.ndarray:
    """Return distances aligned with `mesh.vertex_handles()`."""
    if len(sources) == 0:
        raise InvalidParamsError('no growth source')
    if solver == 'graph':
        return graph_distances(mesh, sources)
    if solver == 'heat':
        return heat_distances(mesh, sources)
    raise InvalidParamsError(f'unknown geodesic solver: {solver}')


def _dense_indices(mesh: Mesh) -> np.ndarray:
    remap = np.full(mesh.num_vertex_slots, -1, dtype=np.int64)
    remap[mesh.vertex_handles()] = np.arange(mesh.vertex_count)
    return remap


def _edge_graph(mesh: Mesh, remap: np.ndarray) -> sparse.csr_matrix:
    ends = remap[mesh.edge_array()]
    lengths = mesh.edge_lengths()
    # explicit zeros would read as missing edges
    floor = max(1e-12 * float(lengths.mean()) if len(lengths) else 0.0, 1e-300)
    weights = np.maximum(lengths, floor)
    n = mesh.vertex_count
    return sparse.csr_matrix((weights, (ends[:, 0], ends[:, 1])), shape=(n, n))


def _check_components(graph: sparse.csr_matrix, source_idx: np.ndarray) -> None:
    count, labels = csgraph.connected_components(graph, directed=False)
    if count == 1:
        return
    covered = np.zeros(count, dtype=bool)
    covered[labels[source_idx]] = True
    if not np.all(covered):
        missing = int(np.flatnonzero(~covered)[0])
        raise DisconnectedComponentWithoutSourceError(
            f'component {missing} of {count} holds no growth source'
        )


def graph_distances(mesh: Mesh, sources: SourceSet) -> np.ndarray:
    remap = _dense_indices(mesh)
    graph = _edge_graph(mesh, remap)
    source_idx = remap[np.asarray(sources.vertices, dtype=np.int64)]
    _check_components(graph, source_idx)
    dist = csgraph.dijkstra(graph, directed=False, indices=source_idx, min_only=True)
    dist[source_idx] = 0.0
    return np.asarray(dist, dtype=np.float64)


def heat_distances(mesh: Mesh, sources: SourceSet) -> np.ndarray:
    remap = _dense_indices(mesh)
    graph = _edge_graph(mesh, remap)
    source_idx = remap[np.asarray(sources.vertices, dtype=np.int64)]
    _check_components(graph, source_idx)

    n = mesh.vertex_count
    pos = mesh.positions[mesh.vertex_handles()]
    tris = remap[mesh.face_array()]
    p = [pos[tris[:, k]] for k in range(3)]

    normal = np.cross(p[1] - p[0], p[2] - p[0])
    double_area = np.maximum(np.linalg.norm(normal, axis=1), 1e-300)
    unit = normal / double_area[:, None]
    area = 0.5 * double_area

    # cotangent of the corner angle at each vertex of each face
    cot = np.empty((len(tris), 3))
    for k in range(3):
        a = p[(k + 1) % 3] - p[k]
        b = p[(k + 2) % 3] - p[k]
        cot[:, k] = np.einsum('ij,ij->i', a, b) / double_area

    rows, cols, vals = [], [], []
    for k in range(3):
        i = tris[:, (k + 1) % 3]
        j = tris[:, (k + 2) % 3]
        w = 0.5 * cot[:, k]
        rows += [i, j, i, j]
        cols += [j, i, i, j]
        vals += [-w, -w, w, w]
    stiffness = sparse.csr_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(n, n),
    )
    mass = np.bincount(tris.ravel(), weights=np.repeat(area / 3.0, 3), minlength=n)

    h = float(mesh.edge_lengths().mean())
    t = h * h
    impulse = np.zeros(n)
    impulse[source_idx] = 1.0
    heat = spsolve((sparse.diags(mass) + t * stiffness).tocsc(), impulse)

    grad = np.zeros((len(tris), 3))
    for k in range(3):
        opposite = p[(k + 2) % 3] - p[(k + 1) % 3]
        grad += heat[tris[:, k], None] * np.cross(unit, opposite)
    grad /= double_area[:, None]
    norm = np.linalg.norm(grad, axis=1)
    field = np.zeros_like(grad)
    ok = norm > 0.0
    field[ok] = -grad[ok] / norm[ok, None]

    div = np.zeros(n)
    for k in range(3):
        e1 = p[(k + 1) % 3] - p[k]
        e2 = p[(k + 2) % 3] - p[k]
        contrib = 0.5 * (
            cot[:, (k + 2) % 3] * np.einsum('ij,ij->i', e1, field)
            + cot[:, (k + 1) % 3] * np.einsum('ij,ij->i', e2, field)
        )
        np.add.at(div, tris[:, k], contrib)

    scale = float(stiffness.diagonal().mean()) if n else 1.0
    regular = stiffness + 1e-10 * scale * sparse.identity(n)
    phi = spsolve(regular.tocsc(), -div)
    phi = phi - phi[source_idx].min()
    phi[source_idx] = 0.0
    phi = np.maximum(phi, 0.0)
    logger.debug(f'Heat geodesics: t = {t:.3g}, max distance {phi.max():.4g}')
    return phi
