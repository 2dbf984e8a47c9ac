import numpy as np
import pytest

from petalgrow.analysis import (
    FailureStatus,
    brute_force_intersections,
    count_self_intersections,
    detect_failure,
    intersecting_pairs,
    mean_valence,
    metrics,
    triangles_intersect,
)
from petalgrow.analysis.intersections import _box_candidates
from petalgrow.generators import torus
from petalgrow.mesh import Mesh, build_mesh

PLATE = np.array([(0, 0, 0), (2, 0, 0), (0, 2, 0)], dtype=float)
SPIKE = np.array([(0.3, 0.3, -1), (0.3, 0.3, 1), (-1, -1, 0)], dtype=float)


@pytest.fixture
def octahedron() -> Mesh:
    positions = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    triangles = [
        (0, 2, 4), (2, 1, 4), (1, 3, 4), (3, 0, 4),
        (2, 0, 5), (1, 2, 5), (3, 1, 5), (0, 3, 5),
    ]
    return build_mesh(positions, triangles)


def soup(triangles: np.ndarray) -> Mesh:
    n = len(triangles)
    return build_mesh(triangles.reshape(-1, 3), np.arange(3 * n).reshape(n, 3).tolist())


def sliver_over_grid() -> Mesh:
    """A 20x20 grid of small flat triangles crossed by one long thin sheet."""
    small = np.array([(0, 0, 0), (0.3, 0, 0), (0, 0.3, 0)], dtype=float)
    cells = [small + (x, y, 0) for x in range(20) for y in range(20)]
    sheet = np.array([(-0.9, 10.1, -0.5), (21.1, 10.1, 0.5), (21.1, 10.12, 0.5)])
    return soup(np.stack(cells + [sheet]))


class TestTrianglePair:
    def test_piercing(self) -> None:
        assert triangles_intersect(PLATE, SPIKE)
        assert triangles_intersect(SPIKE, PLATE)

    def test_separated(self) -> None:
        assert not triangles_intersect(PLATE, SPIKE + (5, 0, 0))

    def test_touching_at_a_vertex(self) -> None:
        other = np.array([(2, 0, 0), (3, 0, 1), (3, 0, -1)], dtype=float)
        assert not triangles_intersect(PLATE, other)

    def test_coplanar_overlap(self) -> None:
        assert triangles_intersect(PLATE, PLATE * 0.5 + (0.2, 0.2, 0))
        assert not triangles_intersect(PLATE, PLATE + (3, 0, 0))

    def test_coplanar_shared_edge(self) -> None:
        other = np.array([(2, 0, 0), (0, 2, 0), (2, 2, 0)], dtype=float)
        assert not triangles_intersect(PLATE, other)


class TestSelfIntersections:
    def test_piercing_pair(self) -> None:
        mesh = soup(np.stack([PLATE, SPIKE]))
        assert count_self_intersections(mesh) == 1
        assert brute_force_intersections(mesh) == 1
        f, g = intersecting_pairs(mesh, 1e-10)
        assert (f.tolist(), g.tolist()) == ([0], [1])

    def test_clean_surfaces(self, flat_disk: Mesh, octahedron: Mesh) -> None:
        assert count_self_intersections(flat_disk) == 0
        assert count_self_intersections(octahedron) == 0
        assert count_self_intersections(torus()) == 0

    def test_random_soup_matches_brute_force(self) -> None:
        rng = np.random.default_rng(8)
        centers = rng.uniform(0, 2, (60, 1, 3))
        mesh = soup(centers + rng.normal(scale=0.3, size=(60, 3, 3)))
        count = count_self_intersections(mesh)
        assert count == brute_force_intersections(mesh)
        assert count > 0

    def test_single_face(self, triangle: Mesh) -> None:
        assert count_self_intersections(triangle) == 0

    def test_long_sliver_matches_brute_force(self) -> None:
        mesh = sliver_over_grid()
        count = count_self_intersections(mesh)
        assert count == brute_force_intersections(mesh)
        assert count >= 1

    def test_long_sliver_keeps_candidates_local(self) -> None:
        mesh = sliver_over_grid()
        corners = mesh.positions[mesh.face_array()]
        i, j = _box_candidates(corners.min(axis=1), corners.max(axis=1))
        assert np.all(i < j)
        assert len(i) < 4 * mesh.face_count


class TestMetrics:
    def test_octahedron(self, octahedron: Mesh) -> None:
        report = metrics(octahedron)
        assert (report.vertex_count, report.edge_count, report.face_count) == (6, 12, 8)
        assert report.mean_valence == pytest.approx(4.0)
        assert report.mean_quality == pytest.approx(1.0)
        assert report.mean_sq_dihedral > 0.0

    def test_torus_is_regular(self) -> None:
        assert mean_valence(torus()) == pytest.approx(6.0)

    def test_flat_lattice(self, lattice: Mesh) -> None:
        report = metrics(lattice)
        assert report.mean_quality == pytest.approx(1.0)
        assert report.mean_sq_dihedral == pytest.approx(0.0, abs=1e-20)
        assert report.sum_sq_dihedral == pytest.approx(0.0, abs=1e-20)
        assert report.self_intersections == 0
        assert report.failure

    def test_skip_intersections(self, lattice: Mesh) -> None:
        assert metrics(lattice, intersections=False).self_intersections == -1

    def test_single_triangle_has_no_hinges(self, triangle: Mesh) -> None:
        report = metrics(triangle)
        assert report.mean_sq_dihedral == 0.0
        assert report.mean_valence == pytest.approx(2.0)


class TestFailure:
    def test_healthy(self, wavy_disk: Mesh) -> None:
        assert detect_failure(wavy_disk, 0.3) == FailureStatus.ok()

    def test_non_finite(self, hexagon_fan: Mesh) -> None:
        hexagon_fan.positions[3, 1] = np.nan
        status = detect_failure(hexagon_fan, 1.0)
        assert status.failed
        assert status.reason == 'non-finite'
        assert metrics(hexagon_fan).self_intersections == -1

    def test_degenerate_long_edge(self, hexagon_fan: Mesh) -> None:
        hexagon_fan.positions[1] = (20.0, 0.0, 0.0)
        hexagon_fan.positions[2] = (40.0, 0.0, 0.0)
        status = detect_failure(hexagon_fan, 1.0)
        assert not status
        assert status.reason == 'degenerate-long-edge'

    def test_degenerate_short_edges_are_tolerated(self, hexagon_fan: Mesh) -> None:
        hexagon_fan.positions[2] = (2.0, 0.0, 0.0)
        assert detect_failure(hexagon_fan, 1.0).failed is False
