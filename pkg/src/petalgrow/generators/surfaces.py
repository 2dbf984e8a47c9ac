"""
Unperturbed initial surfaces as position and triangle arrays.

Every surface is counter-clockwise oriented and has near-uniform edge
lengths.
"""
from __future__ import annotations

import math
from typing import List, Sequence, Tuple

import numpy as np

__all__ = (
    'disk_surface',
    'annulus_surface',
    'moebius_surface',
    'torus_surface',
    'punctured_torus_surface',
)

Surface = Tuple[np.ndarray, List[Tuple[int, int, int]]]


def _ring(radius: float, count: int) -> np.ndarray:
    angles = 2.0 * np.pi * np.arange(count) / count
    return np.stack(
        [radius * np.cos(angles), radius * np.sin(angles), np.zeros(count)], axis=1
    )


def _zip_rings(inner: Sequence[int], outer: Sequence[int]) -> List[Tuple[int, int, int]]:
    """Triangulate the band between two concentric rings starting at angle 0."""
    na, nb = len(inner), len(outer)
    ia = ib = 0
    triangles = []
    for _ in range(na + nb):
        advance_outer = ia == na or (
            ib < nb and (ib + 1) / nb <= (ia + 1) / na
        )
        if advance_outer:
            triangles.append((inner[ia % na], outer[ib % nb], outer[(ib + 1) % nb]))
            ib += 1
        else:
            triangles.append((inner[ia % na], outer[ib % nb], inner[(ia + 1) % na]))
            ia += 1
    return triangles


def disk_surface(radius: float, radial: int, angular: int) -> Surface:
    """Center vertex plus `radial` rings, the outermost with `angular` vertices."""
    rings = [[0]]
    chunks = [np.zeros((1, 3))]
    for i in range(1, radial + 1):
        count = max(3, int(round(angular * i / radial)))
        start = sum(len(r) for r in rings)
        rings.append(list(range(start, start + count)))
        chunks.append(_ring(radius * i / radial, count))

    triangles = []
    first = rings[1]
    for k in range(len(first)):
        triangles.append((0, first[k], first[(k + 1) % len(first)]))
    for inner, outer in zip(rings[1:], rings[2:]):
        triangles += _zip_rings(inner, outer)
    return np.concatenate(chunks), triangles


def annulus_surface(
    inner_radius: float, outer_radius: float, radial: int, angular: int
) -> Surface:
    """`radial` bands; the outer ring has `angular` vertices, inner rings fewer."""
    spacing = (outer_radius - inner_radius) / radial
    rings: List[List[int]] = []
    chunks = []
    start = 0
    for i in range(radial + 1):
        r = inner_radius + i * spacing
        count = max(3, int(round(angular * r / outer_radius)))
        rings.append(list(range(start, start + count)))
        chunks.append(_ring(r, count))
        start += count

    triangles = []
    for inner, outer in zip(rings, rings[1:]):
        triangles += _zip_rings(inner, outer)
    return np.concatenate(chunks), triangles


def moebius_surface(radius: float, width: float, rows: int, segments: int) -> Surface:
    """
    Half-twisted strip cut open along one cross-section.

    The first and last columns coincide geometrically (with rows reversed)
    but are not connected, so the surface is an orientable disk.
    """
    u = 2.0 * np.pi * np.arange(segments + 1) / segments
    s = np.linspace(-0.5 * width, 0.5 * width, rows)
    uu, ss = np.meshgrid(u, s, indexing='ij')
    ring = radius + ss * np.cos(0.5 * uu)
    positions = np.stack(
        [ring * np.cos(uu), ring * np.sin(uu), ss * np.sin(0.5 * uu)], axis=-1
    ).reshape(-1, 3)

    def vid(i: int, k: int) -> int:
        return i * rows + k

    triangles = []
    for i in range(segments):
        for k in range(rows - 1):
            triangles.append((vid(i, k), vid(i + 1, k), vid(i + 1, k + 1)))
            triangles.append((vid(i, k), vid(i + 1, k + 1), vid(i, k + 1)))
    return positions, triangles


def _torus_counts(radius: float, tube_radius: float, segments: int) -> Tuple[int, int]:
    step = 2.0 * np.pi * radius / segments
    rows = int(round(2.0 * np.pi * tube_radius / (math.sqrt(3.0) / 2.0 * step)))
    rows = max(4, rows + rows % 2)
    return segments, rows


def torus_surface(radius: float, tube_radius: float, segments: int) -> Surface:
    """Closed torus from half-shifted rows (an even number of them)."""
    nu, nv = _torus_counts(radius, tube_radius, segments)
    j = np.arange(nv)
    i = np.arange(nu)
    ii, jj = np.meshgrid(i, j, indexing='ij')
    u = 2.0 * np.pi * (ii + 0.5 * (jj % 2)) / nu
    v = 2.0 * np.pi * jj / nv
    ring = radius + tube_radius * np.cos(v)
    positions = np.stack(
        [ring * np.cos(u), ring * np.sin(u), tube_radius * np.sin(v)], axis=-1
    ).reshape(-1, 3)

    def vid(a: int, b: int) -> int:
        return (a % nu) * nv + (b % nv)

    triangles = []
    for a in range(nu):
        for b in range(nv):
            if b % 2 == 0:
                triangles.append((vid(a, b), vid(a + 1, b), vid(a, b + 1)))
                triangles.append((vid(a + 1, b), vid(a + 1, b + 1), vid(a, b + 1)))
            else:
                triangles.append((vid(a, b), vid(a + 1, b), vid(a + 1, b + 1)))
                triangles.append((vid(a, b), vid(a + 1, b + 1), vid(a, b + 1)))
    return positions, triangles


def punctured_torus_surface(radius: float, tube_radius: float, segments: int) -> Surface:
    """Torus with the star of one vertex cut out."""
    positions, triangles = torus_surface(radius, tube_radius, segments)
    hole = 0
    kept = [t for t in triangles if hole not in t]
    # vertex 0 is gone, shift the others down
    return positions[1:], [(a - 1, b - 1, c - 1) for a, b, c in kept]
