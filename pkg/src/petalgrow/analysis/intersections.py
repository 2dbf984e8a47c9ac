"""
Triangle-triangle intersection counting.

Two non-coplanar triangles intersect when each strictly straddles the plane
of the other and their crossing intervals along the common line overlap by
more than the tolerance.  Contact along an edge or at a vertex is therefore
not an intersection.  Coplanar triangles intersect when an edge of one
properly crosses an edge of the other or a vertex of one lies strictly
inside the other.
"""
from __future__ import annotations

from typing import Tuple

import numpy as np

from ..mesh import Mesh

__all__ = (
    'triangles_intersect',
    'intersecting_pairs',
    'count_self_intersections',
    'brute_force_intersections',
)

MAX_CELL_SPAN = 32.0


def _unit(v: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    norm = np.linalg.norm(v, axis=-1)
    out = np.zeros_like(v)
    ok = norm > 0.0
    out[ok] = v[ok] / norm[ok, None]
    return out, ok


def _plane_distances(tri: np.ndarray, plane: np.ndarray, tol: float):  # type: ignore
    normal, ok = _unit(np.cross(plane[:, 1] - plane[:, 0], plane[:, 2] - plane[:, 0]))
    d = np.einsum('ikj,ij->ik', tri - plane[:, None, 0], normal)
    d[np.abs(d) <= tol] = 0.0
    return d, normal, ok


def _interval(tri: np.ndarray, d: np.ndarray, axis: np.ndarray):  # type: ignore
    proj = np.einsum('ikj,ij->ik', tri, axis)
    lo = np.full(len(tri), np.inf)
    hi = np.full(len(tri), -np.inf)
    for k in range(3):
        a, b = k, (k + 1) % 3
        cross = d[:, a] * d[:, b] < 0.0
        if np.any(cross):
            t = d[cross, a] / (d[cross, a] - d[cross, b])
            x = proj[cross, a] + t * (proj[cross, b] - proj[cross, a])
            lo[cross] = np.minimum(lo[cross], x)
            hi[cross] = np.maximum(hi[cross], x)
        on = d[:, k] == 0.0
        lo[on] = np.minimum(lo[on], proj[on, k])
        hi[on] = np.maximum(hi[on], proj[on, k])
    return lo, hi


def _intersect_batch(a: np.ndarray, b: np.ndarray, tol: float) -> np.ndarray:
    """Vectorised test of triangle pairs `a[i]`, `b[i]` (arrays of shape (m, 3, 3))."""
    da, na, oka = _plane_distances(a, b, tol)
    db, nb, okb = _plane_distances(b, a, tol)
    # (na is the normal of b, nb the normal of a)

    result = np.zeros(len(a), dtype=bool)
    valid = oka & okb

    straddle_a = (da.max(axis=1) > 0.0) & (da.min(axis=1) < 0.0)
    straddle_b = (db.max(axis=1) > 0.0) & (db.min(axis=1) < 0.0)
    general = valid & straddle_a & straddle_b
    if np.any(general):
        axis, ok = _unit(np.cross(nb[general], na[general]))
        lo_a, hi_a = _interval(a[general], da[general], axis)
        lo_b, hi_b = _interval(b[general], db[general], axis)
        overlap = np.minimum(hi_a, hi_b) - np.maximum(lo_a, lo_b)
        result[np.flatnonzero(general)] = ok & (overlap > tol)

    coplanar = valid & np.all(da == 0.0, axis=1) & np.all(db == 0.0, axis=1)
    for i in np.flatnonzero(coplanar):
        result[i] = _coplanar_intersect(a[i], b[i], nb[i], tol)
    return result


def _coplanar_intersect(a: np.ndarray, b: np.ndarray, normal: np.ndarray, tol: float) -> bool:
    drop = int(np.argmax(np.abs(normal)))
    keep = [k for k in range(3) if k != drop]
    p = a[:, keep]
    q = b[:, keep]

    def orient(o: np.ndarray, s: np.ndarray, t: np.ndarray) -> float:
        return float((s[0] - o[0]) * (t[1] - o[1]) - (s[1] - o[1]) * (t[0] - o[0]))

    def strictly_inside(x: np.ndarray, tri: np.ndarray) -> bool:
        sign = np.sign(orient(tri[0], tri[1], tri[2]))
        for k in range(3):
            s, t = tri[k], tri[(k + 1) % 3]
            if sign * orient(s, t, x) <= tol * np.linalg.norm(t - s):
                return False
        return True

    for i in range(3):
        p0, p1 = p[i], p[(i + 1) % 3]
        lp = np.linalg.norm(p1 - p0)
        for j in range(3):
            q0, q1 = q[j], q[(j + 1) % 3]
            lq = np.linalg.norm(q1 - q0)
            o1 = orient(p0, p1, q0)
            o2 = orient(p0, p1, q1)
            o3 = orient(q0, q1, p0)
            o4 = orient(q0, q1, p1)
            if (
                o1 * o2 < 0.0
                and o3 * o4 < 0.0
                and min(abs(o1), abs(o2)) > tol * lp
                and min(abs(o3), abs(o4)) > tol * lq
            ):
                return True
    return any(strictly_inside(x, q) for x in p) or any(
        strictly_inside(x, p) for x in q
    )


def triangles_intersect(a: np.ndarray, b: np.ndarray, tol: float = 1e-10) -> bool:
    a = np.asarray(a, dtype=np.float64).reshape(1, 3, 3)
    b = np.asarray(b, dtype=np.float64).reshape(1, 3, 3)
    return bool(_intersect_batch(a, b, tol)[0])


def _shares_vertex(tris: np.ndarray, i: np.ndarray, j: np.ndarray) -> np.ndarray:
    a = tris[i]
    b = tris[j]
    return np.any(a[:, :, None] == b[:, None, :], axis=(1, 2))


def _box_candidates(lo: np.ndarray, hi: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Index pairs `(i, j)`, `i < j`, of boxes that share a grid cell.

    Each box is binned into every cell it overlaps.  The cell is the median
    box extent, widened so no box spans more than `MAX_CELL_SPAN` cells per axis.
    """
    extent = (hi - lo).max(axis=1)
    cell = max(float(np.median(extent)), float(extent.max()) / MAX_CELL_SPAN)
    first = np.floor(lo / cell).astype(np.int64)
    last = np.floor(hi / cell).astype(np.int64)
    span = last - first + 1
    per_box = span.prod(axis=1)

    owner = np.repeat(np.arange(len(lo)), per_box)
    rank = np.arange(len(owner)) - np.repeat(np.cumsum(per_box) - per_box, per_box)
    sx, sy = span[owner, 0], span[owner, 1]
    offset = np.stack([rank % sx, (rank // sx) % sy, rank // (sx * sy)], axis=1)
    _, key = np.unique(first[owner] + offset, axis=0, return_inverse=True)
    key = key.reshape(-1)

    order = np.lexsort((owner, key))
    key, owner = key[order], owner[order]
    starts = np.flatnonzero(np.r_[True, key[1:] != key[:-1]])
    ends = np.r_[starts[1:], len(key)]
    group_end = np.repeat(ends, ends - starts)
    later = group_end - np.arange(len(key)) - 1
    first_of = np.repeat(np.arange(len(key)), later)
    step = np.arange(len(first_of)) - np.repeat(np.cumsum(later) - later, later)
    i = owner[first_of]
    j = owner[first_of + 1 + step]

    pair = np.unique(i * len(lo) + j)
    return pair // len(lo), pair % len(lo)


def intersecting_pairs(mesh: Mesh, tol: float) -> Tuple[np.ndarray, np.ndarray]:
    """Face handle pairs `(f, g)`, `f < g`, whose triangles intersect."""
    faces = mesh.face_handles()
    empty = np.zeros(0, dtype=np.int64)
    if len(faces) < 2:
        return empty, empty
    tris = mesh.face_array()
    corners = mesh.positions[tris]
    lo = corners.min(axis=1) - tol
    hi = corners.max(axis=1) + tol
    if not float((hi - lo).max()) > 0.0:
        return empty, empty

    i, j = _box_candidates(lo, hi)
    keep = ~_shares_vertex(tris, i, j)
    i, j = i[keep], j[keep]

    boxes = np.all((lo[i] <= hi[j]) & (lo[j] <= hi[i]), axis=1)
    i, j = i[boxes], j[boxes]

    hit = _intersect_batch(corners[i], corners[j], tol)
    return faces[i[hit]], faces[j[hit]]


def count_self_intersections(mesh: Mesh, tol: float = 1e-10) -> int:
    """Number of intersecting face pairs that share no vertex."""
    return len(intersecting_pairs(mesh, tol)[0])


def brute_force_intersections(mesh: Mesh, tol: float = 1e-10) -> int:
    """All-pairs reference count, quadratic in the face count."""
    tris = mesh.face_array()
    n = len(tris)
    if n < 2:
        return 0
    i, j = np.triu_indices(n, k=1)
    keep = ~_shares_vertex(tris, i, j)
    corners = mesh.positions[tris]
    return int(np.count_nonzero(_intersect_batch(corners[i[keep]], corners[j[keep]], tol)))
