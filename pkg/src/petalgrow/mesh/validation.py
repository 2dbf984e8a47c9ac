from __future__ import annotations

from typing import Dict, List, Optional, Set, Tuple

from .exceptions import MeshValidationError
from .halfedge import Mesh
from .models import BOUNDARY

__all__ = 'validate_mesh', 'is_valid_mesh', 'mesh_problem'


def validate_mesh(mesh: Mesh) -> None:
    """Run the full structural check, raising `MeshValidationError` on failure."""
    problem = mesh_problem(mesh)
    if problem is not None:
        raise MeshValidationError(problem)


def is_valid_mesh(mesh: Mesh) -> bool:
    return mesh_problem(mesh) is None


def mesh_problem(mesh: Mesh) -> Optional[str]:
    origin = mesh._he_origin
    nxt = mesh._he_next
    face = mesh._he_face

    vertices = list(mesh.vertices())
    edges = list(mesh.edges())
    faces = list(mesh.faces())
    if len(vertices) != mesh.vertex_count:
        return 'vertex count out of sync'
    if len(edges) != mesh.edge_count:
        return 'edge count out of sync'
    if len(faces) != mesh.face_count:
        return 'face count out of sync'

    outgoing: Dict[int, List[int]] = {v: [] for v in vertices}
    vertex_pairs: Set[Tuple[int, int]] = set()
    for e in edges:
        h = 2 * e
        t = h + 1
        u, v = origin[h], origin[t]
        if not (mesh.is_vertex_alive(u) and mesh.is_vertex_alive(v)):
            return f'edge {e} references a dead vertex'
        if u == v:
            return f'edge {e} is a loop'
        if face[h] == BOUNDARY and face[t] == BOUNDARY:
            return f'edge {e} borders no face'
        if face[h] == face[t]:
            return f'edge {e} borders face {face[h]} twice'
        pair = (min(u, v), max(u, v))
        if pair in vertex_pairs:
            return f'edge {e} duplicates edge {pair}'
        vertex_pairs.add(pair)
        for x in (h, t):
            outgoing[origin[x]].append(x)
            if face[x] == BOUNDARY:
                if nxt[x] != -1:
                    return f'boundary half-edge {x} has a next link'
            elif not mesh.is_face_alive(face[x]):
                return f'half-edge {x} references dead face {face[x]}'

    triples: Set[Tuple[int, ...]] = set()
    for f in faces:
        h0 = mesh._f_he[f]
        if not mesh.is_edge_alive(h0 >> 1) or face[h0] != f:
            return f'face {f} has a stale half-edge'
        cycle = [h0]
        h = h0
        for _ in range(3):
            h = nxt[h]
            if h < 0 or not mesh.is_edge_alive(h >> 1) or face[h] != f:
                return f'face {f} has a broken next cycle'
            cycle.append(h)
        if cycle[3] != h0:
            return f'face {f} is not a triangle'
        tri = [origin[x] for x in cycle[:3]]
        for i in range(3):
            if origin[cycle[i] ^ 1] != tri[(i + 1) % 3]:
                return f'face {f} has inconsistent half-edge ends'
        if len(set(tri)) != 3:
            return f'face {f} repeats a vertex'
        key = tuple(sorted(tri))
        if key in triples:
            return f'face {f} is a duplicate'
        triples.add(key)

    for v in vertices:
        hs = outgoing[v]
        if not hs:
            return f'vertex {v} is isolated'
        anchor = mesh._v_he[v]
        if anchor not in hs:
            return f'vertex {v} has a stale anchor'
        boundary = [x for x in hs if face[x] == BOUNDARY]
        if len(boundary) > 1:
            return f'vertex {v} joins several fans'
        if boundary and face[anchor] != BOUNDARY:
            return f'boundary vertex {v} is not anchored on the boundary'
        walked = 0
        for _ in mesh.outgoing(v):
            walked += 1
            if walked > len(hs):
                return f'vertex {v} has a cyclic walk mismatch'
        if walked != len(hs):
            return f'vertex {v} star is not a single fan'

    return None
