"""
Half-edge triangle mesh with boundary.

Half-edges are allocated in pairs: half-edge `h` and its twin `h ^ 1` form the
edge `h >> 1`.  Half-edges lying on the boundary carry the face marker
`BOUNDARY` and no `next` link; a boundary vertex is always anchored at its
outgoing boundary half-edge so that fan walks start at one side of the fan.

Deleted elements are tombstoned, handles are never reused within the life of
a mesh.  `compact()` builds a densely numbered copy.
"""
from __future__ import annotations

from typing import (
    Dict,
    Iterator,
    List,
    Optional,
    Sequence,
    Set,
    Tuple,
    Union,
)

import numpy as np

from .exceptions import (
    BoundaryEdgeError,
    DanglingIndexError,
    DeadHandleError,
    EdgeExistsError,
    FoldOverError,
    InconsistentOrientationError,
    LinkConditionViolation,
    NonConvexQuadError,
    NonManifoldInputError,
    NotAnEarTipError,
    WouldBreakBoundaryError,
)
from .models import BOUNDARY

__all__ = 'Mesh', 'build_mesh'


ArrayLike = Union[np.ndarray, Sequence[Sequence[float]]]


class Mesh:
    def __init__(self) -> None:
        self._pos = np.zeros((64, 3), dtype=np.float64)
        self._v_he: List[int] = []
        self._v_alive: List[bool] = []
        self._he_origin: List[int] = []
        self._he_next: List[int] = []
        self._he_face: List[int] = []
        self._e_alive: List[bool] = []
        self._f_he: List[int] = []
        self._f_alive: List[bool] = []
        self._num_vertices = 0
        self._num_edges = 0
        self._num_faces = 0
        self._revision = 0
        self._cache: Dict[str, Tuple[int, np.ndarray]] = {}

    # ---- construction ----------------------------------------------------

    @classmethod
    def from_arrays(
        cls, positions: ArrayLike, triangles: Sequence[Sequence[int]]
    ) -> Mesh:
        pos = np.asarray(positions, dtype=np.float64)
        if pos.size == 0:
            pos = pos.reshape(0, 3)
        if pos.ndim != 2 or pos.shape[1] != 3:
            raise ValueError(f'positions must be an (n, 3) array: {pos.shape}')

        n = len(pos)
        seen_faces: Set[Tuple[int, ...]] = set()
        for f, tri in enumerate(triangles):
            if len(tri) != 3:
                raise NonManifoldInputError(f'face {f} is not a triangle: {tri}')
            for i in tri:
                if not 0 <= int(i) < n:
                    raise DanglingIndexError(f'face {f} references vertex {i}')
            if len(set(tri)) != 3:
                raise NonManifoldInputError(f'face {f} repeats a vertex: {tri}')
            key = tuple(sorted(int(i) for i in tri))
            if key in seen_faces:
                raise NonManifoldInputError(f'face {f} is a duplicate: {tri}')
            seen_faces.add(key)

        mesh = cls()
        for p in pos:
            mesh.add_vertex(p)

        directed: Dict[Tuple[int, int], int] = {}
        for f, tri in enumerate(triangles):
            a, b, c = (int(i) for i in tri)
            hs = []
            for u, v in ((a, b), (b, c), (c, a)):
                h = directed.get((u, v))
                if h is None:
                    h = mesh._new_edge(u, v)
                    directed[(u, v)] = h
                    directed[(v, u)] = h ^ 1
                elif mesh._he_face[h] != BOUNDARY:
                    if mesh._he_face[h ^ 1] != BOUNDARY:
                        raise NonManifoldInputError(
                            f'edge ({u}, {v}) borders more than two faces'
                        )
                    raise InconsistentOrientationError(
                        f'face {f} traverses edge ({u}, {v}) in the same '
                        'direction as an adjacent face'
                    )
                hs.append(h)
            mesh._new_face(*hs)

        outgoing: List[List[int]] = [[] for _ in range(n)]
        for h, o in enumerate(mesh._he_origin):
            outgoing[o].append(h)

        for v in range(n):
            hs = outgoing[v]
            if not hs:
                raise NonManifoldInputError(f'vertex {v} is isolated')
            boundary = [h for h in hs if mesh._he_face[h] == BOUNDARY]
            if len(boundary) > 1:
                raise NonManifoldInputError(f'vertex {v} joins several fans')
            mesh._v_he[v] = boundary[0] if boundary else hs[0]
            if sum(1 for _ in mesh.outgoing(v)) != len(hs):
                raise NonManifoldInputError(f'vertex {v} joins several fans')

        return mesh

    def copy(self) -> Mesh:
        other = Mesh.__new__(Mesh)
        other._pos = self._pos.copy()
        other._v_he = list(self._v_he)
        other._v_alive = list(self._v_alive)
        other._he_origin = list(self._he_origin)
        other._he_next = list(self._he_next)
        other._he_face = list(self._he_face)
        other._e_alive = list(self._e_alive)
        other._f_he = list(self._f_he)
        other._f_alive = list(self._f_alive)
        other._num_vertices = self._num_vertices
        other._num_edges = self._num_edges
        other._num_faces = self._num_faces
        other._revision = 0
        other._cache = {}
        return other

    def to_arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """Return live positions and densely indexed triangles in handle order."""
        handles = self.vertex_handles()
        remap = np.full(self.num_vertex_slots, -1, dtype=np.int64)
        remap[handles] = np.arange(len(handles))
        triangles = remap[self.face_array()] if self._num_faces else np.zeros(
            (0, 3), dtype=np.int64
        )
        return self.positions[handles].copy(), triangles

    def compact(self) -> Mesh:
        positions, triangles = self.to_arrays()
        return Mesh.from_arrays(positions, triangles.tolist())

    # ---- sizes and iteration ----------------------------------------------

    @property
    def revision(self) -> int:
        """Counter bumped by every topology edit."""
        return self._revision

    @property
    def num_vertex_slots(self) -> int:
        return len(self._v_alive)

    @property
    def num_edge_slots(self) -> int:
        return len(self._e_alive)

    @property
    def num_face_slots(self) -> int:
        return len(self._f_alive)

    @property
    def vertex_count(self) -> int:
        return self._num_vertices

    @property
    def edge_count(self) -> int:
        return self._num_edges

    @property
    def face_count(self) -> int:
        return self._num_faces

    @property
    def positions(self) -> np.ndarray:
        """Handle-indexed position buffer; rows of dead vertices are stale."""
        return self._pos[: len(self._v_alive)]

    def vertices(self) -> Iterator[int]:
        return (v for v, alive in enumerate(self._v_alive) if alive)

    def edges(self) -> Iterator[int]:
        return (e for e, alive in enumerate(self._e_alive) if alive)

    def faces(self) -> Iterator[int]:
        return (f for f, alive in enumerate(self._f_alive) if alive)

    def is_vertex_alive(self, v: int) -> bool:
        return 0 <= v < len(self._v_alive) and self._v_alive[v]

    def is_edge_alive(self, e: int) -> bool:
        return 0 <= e < len(self._e_alive) and self._e_alive[e]

    def is_face_alive(self, f: int) -> bool:
        return 0 <= f < len(self._f_alive) and self._f_alive[f]

    # ---- vectorised views (cached per revision) ---------------------------

    def vertex_handles(self) -> np.ndarray:
        return self._cached('vertices', self._build_vertex_handles)

    def edge_handles(self) -> np.ndarray:
        return self._cached('edges', self._build_edge_handles)

    def face_handles(self) -> np.ndarray:
        return self._cached('faces', self._build_face_handles)

    def edge_array(self) -> np.ndarray:
        """Endpoints `(origin(2e), origin(2e + 1))` of live edges."""
        return self._cached('edge_array', self._build_edge_array)

    def face_array(self) -> np.ndarray:
        """Vertex triples of live faces, counter-clockwise."""
        return self._cached('face_array', self._build_face_array)

    def hinge_array(self) -> Tuple[np.ndarray, np.ndarray]:
        """
        Interior edges as hinge stencils.

        Returns the edge handles and an (H, 4) array `(u, v, w, x)` where
        `u -> v` is half-edge `2e`, `w` is opposite in its face and `x`
        opposite in the face of the twin.
        """
        edges = self._cached('hinge_edges', self._build_hinge_edges)
        return edges, self._cached('hinges', self._build_hinges)

    def _cached(self, key: str, builder):  # type: ignore
        item = self._cache.get(key)
        if item is not None and item[0] == self._revision:
            return item[1]
        value = builder()
        self._cache[key] = (self._revision, value)
        return value

    def _build_vertex_handles(self) -> np.ndarray:
        return np.flatnonzero(np.asarray(self._v_alive, dtype=bool))

    def _build_edge_handles(self) -> np.ndarray:
        return np.flatnonzero(np.asarray(self._e_alive, dtype=bool))

    def _build_face_handles(self) -> np.ndarray:
        return np.flatnonzero(np.asarray(self._f_alive, dtype=bool))

    def _build_edge_array(self) -> np.ndarray:
        origin = self._he_origin
        out = np.empty((self._num_edges, 2), dtype=np.int64)
        for i, e in enumerate(self.edge_handles()):
            out[i, 0] = origin[2 * e]
            out[i, 1] = origin[2 * e + 1]
        return out

    def _build_face_array(self) -> np.ndarray:
        origin = self._he_origin
        nxt = self._he_next
        out = np.empty((self._num_faces, 3), dtype=np.int64)
        for i, f in enumerate(self.face_handles()):
            h0 = self._f_he[f]
            h1 = nxt[h0]
            out[i, 0] = origin[h0]
            out[i, 1] = origin[h1]
            out[i, 2] = origin[nxt[h1]]
        return out

    def _build_hinge_edges(self) -> np.ndarray:
        face = self._he_face
        return np.asarray(
            [
                e
                for e in self.edge_handles()
                if face[2 * e] != BOUNDARY and face[2 * e + 1] != BOUNDARY
            ],
            dtype=np.int64,
        )

    def _build_hinges(self) -> np.ndarray:
        origin = self._he_origin
        nxt = self._he_next
        edges = self._cached('hinge_edges', self._build_hinge_edges)
        out = np.empty((len(edges), 4), dtype=np.int64)
        for i, e in enumerate(edges):
            h = 2 * e
            t = h + 1
            out[i, 0] = origin[h]
            out[i, 1] = origin[t]
            out[i, 2] = origin[nxt[nxt[h]]]
            out[i, 3] = origin[nxt[nxt[t]]]
        return out

    # ---- half-edge navigation ---------------------------------------------

    @staticmethod
    def twin(h: int) -> int:
        return h ^ 1

    @staticmethod
    def edge_of(h: int) -> int:
        return h >> 1

    def origin(self, h: int) -> int:
        return self._he_origin[h]

    def dest(self, h: int) -> int:
        return self._he_origin[h ^ 1]

    def next(self, h: int) -> int:
        return self._he_next[h]

    def prev(self, h: int) -> int:
        return self._he_next[self._he_next[h]]

    def face_of(self, h: int) -> int:
        return self._he_face[h]

    def halfedge(self, v: int) -> int:
        self._check_vertex(v)
        return self._v_he[v]

    def face_halfedge(self, f: int) -> int:
        self._check_face(f)
        return self._f_he[f]

    def outgoing(self, v: int) -> Iterator[int]:
        """Outgoing half-edges of `v`, starting at the boundary one if any."""
        start = self._v_he[v]
        h = start
        while True:
            yield h
            t = h ^ 1
            if self._he_face[t] == BOUNDARY:
                return
            h = self._he_next[t]
            if h == start:
                return

    def neighbors(self, v: int) -> List[int]:
        self._check_vertex(v)
        origin = self._he_origin
        return [origin[h ^ 1] for h in self.outgoing(v)]

    def valence(self, v: int) -> int:
        self._check_vertex(v)
        return sum(1 for _ in self.outgoing(v))

    def vertex_faces(self, v: int) -> List[int]:
        self._check_vertex(v)
        face = self._he_face
        return [face[h] for h in self.outgoing(v) if face[h] != BOUNDARY]

    def face_halfedges(self, f: int) -> Tuple[int, int, int]:
        self._check_face(f)
        h0 = self._f_he[f]
        h1 = self._he_next[h0]
        return h0, h1, self._he_next[h1]

    def face_vertices(self, f: int) -> Tuple[int, int, int]:
        h0, h1, h2 = self.face_halfedges(f)
        origin = self._he_origin
        return origin[h0], origin[h1], origin[h2]

    def edge_vertices(self, e: int) -> Tuple[int, int]:
        self._check_edge(e)
        return self._he_origin[2 * e], self._he_origin[2 * e + 1]

    def edge_faces(self, e: int) -> Tuple[int, int]:
        self._check_edge(e)
        return self._he_face[2 * e], self._he_face[2 * e + 1]

    def find_halfedge(self, u: int, v: int) -> Optional[int]:
        self._check_vertex(u)
        origin = self._he_origin
        for h in self.outgoing(u):
            if origin[h ^ 1] == v:
                return h
        return None

    def find_edge(self, u: int, v: int) -> Optional[int]:
        h = self.find_halfedge(u, v)
        return None if h is None else h >> 1

    def is_boundary_vertex(self, v: int) -> bool:
        self._check_vertex(v)
        return self._he_face[self._v_he[v]] == BOUNDARY

    def is_boundary_edge(self, e: int) -> bool:
        self._check_edge(e)
        face = self._he_face
        return face[2 * e] == BOUNDARY or face[2 * e + 1] == BOUNDARY

    def is_boundary_face(self, f: int) -> bool:
        return any(self.is_boundary_vertex(v) for v in self.face_vertices(f))

    def boundary_neighbors(self, v: int) -> Tuple[int, int]:
        """Return `(previous, next)` of a boundary vertex along its loop."""
        self._check_vertex(v)
        first = self._v_he[v]
        if self._he_face[first] != BOUNDARY:
            raise ValueError(f'vertex {v} is not on the boundary')
        last = first
        for last in self.outgoing(v):
            pass
        return self._he_origin[last ^ 1], self._he_origin[first ^ 1]

    def boundary_loops(self) -> List[List[int]]:
        """Boundary loops as vertex cycles, in order of their lowest handle."""
        visited: Set[int] = set()
        loops = []
        for v in self.vertices():
            if v in visited or self._he_face[self._v_he[v]] != BOUNDARY:
                continue
            loop = []
            u = v
            while u not in visited:
                visited.add(u)
                loop.append(u)
                u = self._he_origin[self._v_he[u] ^ 1]
            loops.append(loop)
        return loops

    def edge_length(self, e: int) -> float:
        u, v = self.edge_vertices(e)
        return float(np.linalg.norm(self._pos[v] - self._pos[u]))

    def edge_lengths(self) -> np.ndarray:
        ends = self.edge_array()
        pos = self.positions
        return np.linalg.norm(pos[ends[:, 1]] - pos[ends[:, 0]], axis=1)

    def mean_edge_length(self) -> float:
        if self._num_edges == 0:
            return 0.0
        return float(self.edge_lengths().mean())

    # ---- element bookkeeping ----------------------------------------------

    def add_vertex(self, position: Sequence[float]) -> int:
        v = len(self._v_alive)
        if v >= len(self._pos):
            grown = np.zeros((2 * len(self._pos), 3), dtype=np.float64)
            grown[:v] = self._pos[:v]
            self._pos = grown
        self._pos[v] = position
        self._v_alive.append(True)
        self._v_he.append(-1)
        self._num_vertices += 1
        self._revision += 1
        return v

    def set_position(self, v: int, position: Sequence[float]) -> None:
        self._check_vertex(v)
        self._pos[v] = position

    def _new_edge(self, u: int, v: int) -> int:
        h = len(self._he_origin)
        self._he_origin += [u, v]
        self._he_next += [-1, -1]
        self._he_face += [BOUNDARY, BOUNDARY]
        self._e_alive.append(True)
        self._num_edges += 1
        self._revision += 1
        return h

    def _new_face(self, h0: int, h1: int, h2: int) -> int:
        f = len(self._f_alive)
        self._f_alive.append(True)
        self._f_he.append(h0)
        self._num_faces += 1
        self._link(f, h0, h1, h2)
        return f

    def _link(self, f: int, h0: int, h1: int, h2: int) -> None:
        nxt = self._he_next
        face = self._he_face
        nxt[h0], nxt[h1], nxt[h2] = h1, h2, h0
        face[h0] = face[h1] = face[h2] = f
        self._f_he[f] = h0
        self._revision += 1

    def _kill_edge(self, e: int) -> None:
        self._e_alive[e] = False
        self._num_edges -= 1
        for h in (2 * e, 2 * e + 1):
            self._he_next[h] = -1
            self._he_face[h] = BOUNDARY

    def _kill_face(self, f: int) -> None:
        self._f_alive[f] = False
        self._num_faces -= 1

    def _kill_vertex(self, v: int) -> None:
        self._v_alive[v] = False
        self._v_he[v] = -1
        self._num_vertices -= 1

    def _reanchor(self, v: int, hint: int) -> None:
        # walk clockwise from an outgoing half-edge until the boundary one
        nxt = self._he_next
        face = self._he_face
        h = hint
        while face[h] != BOUNDARY:
            h = nxt[nxt[h]] ^ 1
            if h == hint:
                break
        self._v_he[v] = h

    def _absorb(self, keep: int, gone: int) -> None:
        # `keep` takes the place of `gone` inside gone's face
        f = self._he_face[gone]
        self._he_face[keep] = f
        if f == BOUNDARY:
            self._he_next[keep] = -1
        else:
            nx = self._he_next[gone]
            pv = self._he_next[nx]
            self._he_next[keep] = nx
            self._he_next[pv] = keep
            if self._f_he[f] == gone:
                self._f_he[f] = keep
        o = self._he_origin[gone]
        if self._v_he[o] == gone:
            self._v_he[o] = keep

    def _check_vertex(self, v: int) -> None:
        if not self.is_vertex_alive(v):
            raise DeadHandleError(f'vertex {v} is not alive')

    def _check_edge(self, e: int) -> None:
        if not self.is_edge_alive(e):
            raise DeadHandleError(f'edge {e} is not alive')

    def _check_face(self, f: int) -> None:
        if not self.is_face_alive(f):
            raise DeadHandleError(f'face {f} is not alive')

    # ---- topology edits -----------------------------------------------------

    def split_edge(self, e: int, position: Sequence[float]) -> int:
        self._check_edge(e)
        p = np.asarray(position, dtype=np.float64)
        if p.shape != (3,) or not np.all(np.isfinite(p)):
            raise ValueError(f'invalid split position: {position}')

        nxt = self._he_next
        h = 2 * e
        t = h + 1
        v = self._he_origin[t]
        fh = self._he_face[h]
        ft = self._he_face[t]

        m = self.add_vertex(p)
        h2 = self._new_edge(m, v)
        t2 = h2 ^ 1
        self._he_origin[t] = m
        if self._v_he[v] == t:
            self._v_he[v] = t2

        if fh != BOUNDARY:
            h_n = nxt[h]
            h_p = nxt[h_n]
            w = self._he_origin[h_p]
            a = self._new_edge(m, w)
            self._link(fh, h, a, h_p)
            self._new_face(h2, h_n, a ^ 1)

        if ft != BOUNDARY:
            t_n = nxt[t]
            t_p = nxt[t_n]
            x = self._he_origin[t_p]
            b = self._new_edge(m, x)
            self._link(ft, t2, b, t_p)
            self._new_face(t, t_n, b ^ 1)

        if fh == BOUNDARY:
            self._v_he[m] = h2
        elif ft == BOUNDARY:
            self._v_he[m] = t
        else:
            self._v_he[m] = h2
        self._revision += 1
        return m

    def flip_edge(self, e: int) -> None:
        self._check_edge(e)
        nxt = self._he_next
        origin = self._he_origin
        h = 2 * e
        t = h + 1
        f = self._he_face[h]
        g = self._he_face[t]
        if f == BOUNDARY or g == BOUNDARY:
            raise BoundaryEdgeError(f'edge {e} lies on the boundary')

        h1 = nxt[h]
        h2 = nxt[h1]
        t1 = nxt[t]
        t2 = nxt[t1]
        u = origin[h]
        v = origin[t]
        w = origin[h2]
        x = origin[t2]

        if w == x or self.find_halfedge(w, x) is not None:
            raise EdgeExistsError(f'flipping edge {e} would duplicate edge {w}-{x}')
        if not self._is_strictly_convex((v, w, u, x)):
            raise NonConvexQuadError(f'quad around edge {e} is not strictly convex')

        origin[h] = w
        origin[t] = x
        self._link(f, h, t2, h1)
        self._link(g, t, h2, t1)
        if self._v_he[u] == h:
            self._v_he[u] = t1
        if self._v_he[v] == t:
            self._v_he[v] = h1

    def _is_strictly_convex(self, quad: Tuple[int, int, int, int]) -> bool:
        pts = self._pos[list(quad)]
        n = np.cross(pts[1] - pts[0], pts[2] - pts[0]) + np.cross(
            pts[3] - pts[2], pts[0] - pts[2]
        )
        norm = np.linalg.norm(n)
        if norm == 0.0:
            return False
        n = n / norm
        sides = np.roll(pts, -1, axis=0) - pts
        scale = float(np.max(np.einsum('ij,ij->i', sides, sides)))
        turns = np.cross(sides, np.roll(sides, -1, axis=0)) @ n
        return bool(np.all(turns > 1e-12 * scale))

    def collapse_edge(self, e: int) -> int:
        self._check_edge(e)
        nxt = self._he_next
        origin = self._he_origin
        face = self._he_face

        a = origin[2 * e]
        b = origin[2 * e + 1]
        a_boundary = self.is_boundary_vertex(a)
        b_boundary = self.is_boundary_vertex(b)
        edge_boundary = self.is_boundary_edge(e)

        if a_boundary and b_boundary and not edge_boundary:
            raise WouldBreakBoundaryError(
                f'edge {e} joins two boundary vertices through the interior'
            )

        if b_boundary and not a_boundary:
            s, r, hs = b, a, 2 * e + 1
        else:
            s, r, hs = a, b, 2 * e
        ht = hs ^ 1

        if a_boundary != b_boundary:
            target = self._pos[s].copy()
        else:
            target = 0.5 * (self._pos[a] + self._pos[b])

        opposite = set()
        if face[hs] != BOUNDARY:
            opposite.add(origin[nxt[nxt[hs]]])
        if face[ht] != BOUNDARY:
            opposite.add(origin[nxt[nxt[ht]]])

        s_nbrs = self.neighbors(s)
        r_nbrs = self.neighbors(r)
        if set(s_nbrs) & set(r_nbrs) != opposite:
            raise LinkConditionViolation(f'edge {e} fails the link condition')

        merged = len(s_nbrs) + len(r_nbrs) - 2 - len(opposite)
        if merged < (2 if a_boundary or b_boundary else 3):
            raise LinkConditionViolation(f'collapsing edge {e} leaves a low valence')
        for o in opposite:
            low = 2 if self.is_boundary_vertex(o) else 3
            if self.valence(o) <= low:
                raise LinkConditionViolation(
                    f'collapsing edge {e} degenerates the star of vertex {o}'
                )

        removed = {face[hs], face[ht]}
        self._check_fold_over(s, r, target, removed)

        r_out = list(self.outgoing(r))

        if face[hs] != BOUNDARY:
            f = face[hs]
            hs1 = nxt[hs]
            hs2 = nxt[hs1]
            w_hint = hs2
            s_hint = hs2 ^ 1
            self._absorb(hs2, hs1 ^ 1)
            self._kill_edge(hs1 >> 1)
            self._kill_face(f)
        else:
            w_hint = -1

        if face[ht] != BOUNDARY:
            g = face[ht]
            ht1 = nxt[ht]
            ht2 = nxt[ht1]
            x_hint = ht1 ^ 1
            s_hint = ht1
            self._absorb(ht1, ht2 ^ 1)
            self._kill_edge(ht2 >> 1)
            self._kill_face(g)
        else:
            x_hint = -1

        self._kill_edge(e)
        for h in r_out:
            if self._e_alive[h >> 1]:
                origin[h] = s
        self._kill_vertex(r)
        self._pos[s] = target

        self._reanchor(s, s_hint)
        for hint in (w_hint, x_hint):
            if hint >= 0:
                self._reanchor(origin[hint], hint)

        self._revision += 1
        return s

    def _check_fold_over(
        self, s: int, r: int, target: np.ndarray, removed: Set[int]
    ) -> None:
        pos = self._pos
        for v in (s, r):
            for f in self.vertex_faces(v):
                if f in removed:
                    continue
                tri = list(self.face_vertices(f))
                before = pos[tri]
                after = before.copy()
                for i, u in enumerate(tri):
                    if u in (s, r):
                        after[i] = target
                n0 = np.cross(before[1] - before[0], before[2] - before[0])
                n1 = np.cross(after[1] - after[0], after[2] - after[0])
                if float(n0 @ n1) <= 1e-12 * float(n0 @ n0):
                    raise FoldOverError(f'collapse would fold face {f}')

    def remove_vertex(self, v: int) -> None:
        self._check_vertex(v)
        nxt = self._he_next
        hv = self._v_he[v]
        if self._he_face[hv] != BOUNDARY or self.valence(v) != 2:
            raise NotAnEarTipError(f'vertex {v} is not an ear tip')

        h_av = hv ^ 1
        h_vb = nxt[h_av]
        h_ba = nxt[h_vb]
        if self._he_face[h_ba ^ 1] == BOUNDARY:
            raise NotAnEarTipError(
                f'removing vertex {v} would leave a loose edge'
            )
        a = self._he_origin[h_av]
        b = self._he_origin[h_ba]

        self._kill_face(self._he_face[h_av])
        self._kill_edge(h_av >> 1)
        self._kill_edge(h_vb >> 1)
        self._kill_vertex(v)
        self._he_face[h_ba] = BOUNDARY
        self._he_next[h_ba] = -1

        self._reanchor(a, h_ba ^ 1)
        self._reanchor(b, h_ba)
        self._revision += 1


def build_mesh(positions: ArrayLike, triangles: Sequence[Sequence[int]]) -> Mesh:
    return Mesh.from_arrays(positions, triangles)
