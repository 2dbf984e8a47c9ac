import math

import numpy as np
import pytest

from petalgrow.fairing import (
    FairingError,
    MalformedBoundaryError,
    smooth_boundary,
    smooth_interior,
    smooth_subset,
)
from petalgrow.mesh import Mesh, face_qualities

CENTER = 9  # handle of the origin in the lattice fixture


def incident_quality_variance(mesh: Mesh, v: int) -> float:
    tris = np.asarray([mesh.face_vertices(f) for f in mesh.vertex_faces(v)])
    return float(np.var(face_qualities(mesh.positions, tris)))


def total_turning(mesh: Mesh) -> float:
    pos = mesh.positions
    total = 0.0
    for loop in mesh.boundary_loops():
        pts = pos[loop, :2]
        a = np.roll(pts, -1, axis=0) - pts
        b = np.roll(a, -1, axis=0)
        cross = a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]
        dot = np.einsum('ij,ij->i', a, b)
        total += float(np.abs(np.arctan2(cross, dot)).sum())
    return total


def test_lattice_center(lattice: Mesh) -> None:
    assert np.allclose(lattice.positions[CENTER], 0.0)
    assert lattice.valence(CENTER) == 6


class TestInterior:
    def test_regular_fan_center_is_fixed(self, hexagon_fan: Mesh) -> None:
        smooth_interior(hexagon_fan, 0.75)
        assert np.allclose(hexagon_fan.positions[0], 0.0, atol=1e-12)

    def test_zero_alpha(self, lattice: Mesh) -> None:
        lattice.positions[CENTER] += (0.2, 0.1, 0.0)
        before = lattice.positions.copy()
        smooth_interior(lattice, 0.0)
        assert np.array_equal(lattice.positions, before)

    def test_boundary_vertices_do_not_move(self, lattice: Mesh) -> None:
        lattice.positions[CENTER] += (0.2, 0.1, 0.0)
        before = lattice.positions.copy()
        smooth_interior(lattice, 0.75)
        for v in lattice.vertices():
            if lattice.is_boundary_vertex(v):
                assert np.array_equal(lattice.positions[v], before[v])

    def test_perturbed_vertex_improves_quality(self, lattice: Mesh) -> None:
        lattice.positions[CENTER] += (0.25, 0.15, 0.0)
        before = incident_quality_variance(lattice, CENTER)
        smooth_subset(lattice, [CENTER], 0.75)
        assert incident_quality_variance(lattice, CENTER) < before
        assert np.linalg.norm(lattice.positions[CENTER]) < math.hypot(0.25, 0.15)

    def test_degenerate_face_stays_finite(self, lattice: Mesh) -> None:
        lattice.positions[CENTER] = lattice.positions[CENTER + 1]
        smooth_interior(lattice, 0.75)
        assert np.all(np.isfinite(lattice.positions))


class TestBoundary:
    def test_straight_segment(self, lattice: Mesh) -> None:
        before = lattice.positions.copy()
        smooth_boundary(lattice, 0.1)
        # mid-side vertices of the hexagon are collinear with their neighbours
        for v in lattice.vertices():
            if lattice.is_boundary_vertex(v) and lattice.valence(v) == 4:
                assert np.allclose(lattice.positions[v], before[v])

    def test_zero_beta(self, lattice: Mesh) -> None:
        before = lattice.positions.copy()
        smooth_boundary(lattice, 0.0)
        assert np.array_equal(lattice.positions, before)

    def test_zig_zag_straightens(self, flat_disk: Mesh) -> None:
        loop = flat_disk.boundary_loops()[0]
        for i, v in enumerate(loop):
            flat_disk.positions[v, :2] *= 1.1 if i % 2 else 0.9
        before = total_turning(flat_disk)
        smooth_boundary(flat_disk, 0.1)
        assert total_turning(flat_disk) < before

    def test_interior_vertices_do_not_move(self, wavy_disk: Mesh) -> None:
        before = wavy_disk.positions.copy()
        smooth_boundary(wavy_disk, 0.1)
        for v in wavy_disk.vertices():
            if not wavy_disk.is_boundary_vertex(v):
                assert np.array_equal(wavy_disk.positions[v], before[v])

    def test_single_triangle_is_not_malformed(self, triangle: Mesh) -> None:
        smooth_boundary(triangle, 0.1)
        assert np.all(np.isfinite(triangle.positions))

    def test_malformed_error_is_a_fairing_error(self) -> None:
        assert issubclass(MalformedBoundaryError, FairingError)


class TestSubset:
    def test_empty_set(self, wavy_disk: Mesh) -> None:
        before = wavy_disk.positions.copy()
        smooth_subset(wavy_disk, [], 0.75, beta=0.1)
        assert np.array_equal(wavy_disk.positions, before)

    def test_full_interior_set(self, wavy_disk: Mesh) -> None:
        other = wavy_disk.copy()
        interior = [v for v in wavy_disk.vertices() if not wavy_disk.is_boundary_vertex(v)]
        smooth_interior(wavy_disk, 0.75)
        smooth_subset(other, interior, 0.75)
        assert np.allclose(other.positions, wavy_disk.positions)

    @pytest.mark.parametrize('vertex', [0, 3, 10])
    def test_singleton(self, wavy_disk: Mesh, vertex: int) -> None:
        other = wavy_disk.copy()
        before = other.positions.copy()
        smooth_interior(wavy_disk, 0.75)
        smooth_subset(other, [vertex], 0.75)
        assert np.allclose(other.positions[vertex], wavy_disk.positions[vertex])
        untouched = [v for v in other.vertices() if v != vertex]
        assert np.array_equal(other.positions[untouched], before[untouched])

    def test_boundary_member_uses_boundary_rule(self, wavy_disk: Mesh) -> None:
        v = wavy_disk.boundary_loops()[0][0]
        other = wavy_disk.copy()
        smooth_boundary(wavy_disk, 0.1)
        smooth_subset(other, [v], 0.75, beta=0.1)
        assert np.allclose(other.positions[v], wavy_disk.positions[v])
