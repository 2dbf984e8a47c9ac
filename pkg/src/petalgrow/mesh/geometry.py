from __future__ import annotations

import math
from typing import Tuple

import numpy as np

from .exceptions import BoundaryEdgeError, DegenerateFaceError, IsolatedVertexError
from .halfedge import Mesh
from .models import BoundaryFlags, FaceGeometry

__all__ = (
    'AREA_EPSILON',
    'area_epsilon',
    'triangle_areas',
    'triangle_normals',
    'circumcenters',
    'face_qualities',
    'face_geometry',
    'hinge_angles',
    'dihedral_angle',
    'dihedral_angles',
    'vertex_normal',
    'vertex_normals',
    'boundary_classification',
)


# relative to the squared rest length
AREA_EPSILON = 1e-12

_SQRT3 = math.sqrt(3.0)


def area_epsilon(rest_length: float) -> float:
    return AREA_EPSILON * rest_length * rest_length


def _corners(
    positions: np.ndarray, triangles: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    tris = np.asarray(triangles, dtype=np.int64).reshape(-1, 3)
    return positions[tris[:, 0]], positions[tris[:, 1]], positions[tris[:, 2]]


def triangle_areas(positions: np.ndarray, triangles: np.ndarray) -> np.ndarray:
    p0, p1, p2 = _corners(positions, triangles)
    return 0.5 * np.linalg.norm(np.cross(p1 - p0, p2 - p0), axis=1)


def triangle_normals(
    positions: np.ndarray, triangles: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """Return unit normals and areas; normals of degenerate faces are zero."""
    p0, p1, p2 = _corners(positions, triangles)
    n = np.cross(p1 - p0, p2 - p0)
    norm = np.linalg.norm(n, axis=1)
    unit = np.zeros_like(n)
    ok = norm > 0.0
    unit[ok] = n[ok] / norm[ok, None]
    return unit, 0.5 * norm


def circumcenters(
    positions: np.ndarray, triangles: np.ndarray, eps_area: float = 0.0
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Circumcenters and circumradii of triangles.

    Faces with area not above `eps_area` get their barycenter as center so
    that callers never see non-finite values.
    """
    p0, p1, p2 = _corners(positions, triangles)
    a = p1 - p0
    b = p2 - p0
    axb = np.cross(a, b)
    denom = 2.0 * np.einsum('ij,ij->i', axb, axb)
    area = 0.25 * np.sqrt(2.0 * denom)
    ok = (area > eps_area) & (denom > 0.0)

    centers = (p0 + p1 + p2) / 3.0
    if np.any(ok):
        aa = np.einsum('ij,ij->i', a[ok], a[ok])
        bb = np.einsum('ij,ij->i', b[ok], b[ok])
        num = np.cross(aa[:, None] * b[ok] - bb[:, None] * a[ok], axb[ok])
        centers[ok] = p0[ok] + num / denom[ok, None]
    radii = np.linalg.norm(centers - p0, axis=1)
    return centers, radii


def face_qualities(positions: np.ndarray, triangles: np.ndarray) -> np.ndarray:
    p0, p1, p2 = _corners(positions, triangles)
    area = 0.5 * np.linalg.norm(np.cross(p1 - p0, p2 - p0), axis=1)
    lsq = (
        np.einsum('ij,ij->i', p1 - p0, p1 - p0)
        + np.einsum('ij,ij->i', p2 - p1, p2 - p1)
        + np.einsum('ij,ij->i', p0 - p2, p0 - p2)
    )
    out = np.zeros_like(area)
    ok = lsq > 0.0
    out[ok] = 4.0 * _SQRT3 * area[ok] / lsq[ok]
    return np.clip(out, 0.0, 1.0)


def face_geometry(mesh: Mesh, f: int, eps_area: float = 0.0) -> FaceGeometry:
    tri = np.asarray([mesh.face_vertices(f)], dtype=np.int64)
    pos = mesh.positions
    normals, areas = triangle_normals(pos, tri)
    area = float(areas[0])
    if area <= eps_area or area == 0.0:
        raise DegenerateFaceError(f'face {f} is degenerate (area {area:g})')
    centers, radii = circumcenters(pos, tri)
    return FaceGeometry(
        barycenter=pos[tri[0]].mean(axis=0),
        circumcenter=centers[0],
        circumradius=float(radii[0]),
        area=area,
        normal=normals[0],
        quality=float(face_qualities(pos, tri)[0]),
    )


def hinge_angles(
    positions: np.ndarray, hinges: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Signed dihedral angles of `(u, v, w, x)` hinge stencils.

    The angle is zero for coplanar faces and positive when the wings fold
    toward the face normals.  Returns the angles and a mask of hinges whose
    faces and edge are non-degenerate (angles of the others are zero).
    """
    hinges = np.asarray(hinges, dtype=np.int64).reshape(-1, 4)
    x3 = positions[hinges[:, 0]]
    x4 = positions[hinges[:, 1]]
    x1 = positions[hinges[:, 2]]
    x2 = positions[hinges[:, 3]]
    n1 = np.cross(x1 - x3, x1 - x4)
    n2 = np.cross(x2 - x4, x2 - x3)
    e = x4 - x3
    len1 = np.linalg.norm(n1, axis=1)
    len2 = np.linalg.norm(n2, axis=1)
    elen = np.linalg.norm(e, axis=1)
    ok = (len1 > 0.0) & (len2 > 0.0) & (elen > 0.0)

    theta = np.zeros(len(hinges))
    if np.any(ok):
        u1 = n1[ok] / len1[ok, None]
        u2 = n2[ok] / len2[ok, None]
        ue = e[ok] / elen[ok, None]
        sin = np.einsum('ij,ij->i', np.cross(u2, u1), ue)
        cos = np.einsum('ij,ij->i', u1, u2)
        theta[ok] = np.arctan2(sin, cos)
    return theta, ok


def dihedral_angle(mesh: Mesh, e: int) -> float:
    if mesh.is_boundary_edge(e):
        raise BoundaryEdgeError(f'edge {e} lies on the boundary')
    h = 2 * e
    t = h + 1
    hinge = np.asarray(
        [[
            mesh.origin(h),
            mesh.origin(t),
            mesh.origin(mesh.prev(h)),
            mesh.origin(mesh.prev(t)),
        ]],
        dtype=np.int64,
    )
    theta, _ = hinge_angles(mesh.positions, hinge)
    return float(theta[0])


def dihedral_angles(mesh: Mesh) -> Tuple[np.ndarray, np.ndarray]:
    """Return interior edge handles and their signed dihedral angles."""
    edges, hinges = mesh.hinge_array()
    theta, _ = hinge_angles(mesh.positions, hinges)
    return edges, theta


def vertex_normals(mesh: Mesh) -> np.ndarray:
    """
    Area-weighted unit vertex normals indexed by handle.

    Rows of dead handles (and of vertices whose star is fully degenerate)
    are zero.
    """
    pos = mesh.positions
    tris = mesh.face_array()
    raw = np.cross(pos[tris[:, 1]] - pos[tris[:, 0]], pos[tris[:, 2]] - pos[tris[:, 0]])
    acc = np.zeros((mesh.num_vertex_slots, 3))
    for k in range(3):
        np.add.at(acc, tris[:, k], raw)
    norm = np.linalg.norm(acc, axis=1)
    ok = norm > 0.0
    acc[ok] /= norm[ok, None]
    return acc


def vertex_normal(mesh: Mesh, v: int) -> np.ndarray:
    faces = mesh.vertex_faces(v)
    if not faces:
        raise IsolatedVertexError(f'vertex {v} has no incident face')
    pos = mesh.positions
    tris = np.asarray([mesh.face_vertices(f) for f in faces], dtype=np.int64)
    raw = np.cross(pos[tris[:, 1]] - pos[tris[:, 0]], pos[tris[:, 2]] - pos[tris[:, 0]])
    n = raw.sum(axis=0)
    norm = np.linalg.norm(n)
    if norm == 0.0:
        raise IsolatedVertexError(f'vertex {v} has a degenerate star')
    return n / norm


def boundary_classification(mesh: Mesh) -> BoundaryFlags:
    vertices = np.zeros(mesh.num_vertex_slots, dtype=bool)
    edges = np.zeros(mesh.num_edge_slots, dtype=bool)
    faces = np.zeros(mesh.num_face_slots, dtype=bool)

    handles = mesh.edge_handles()
    if len(handles):
        ends = mesh.edge_array()
        flags = np.asarray([mesh.is_boundary_edge(int(e)) for e in handles])
        edges[handles] = flags
        vertices[ends[flags, 0]] = True
        vertices[ends[flags, 1]] = True

    fh = mesh.face_handles()
    if len(fh):
        faces[fh] = vertices[mesh.face_array()].any(axis=1)
    return BoundaryFlags(vertices=vertices, edges=edges, faces=faces)
