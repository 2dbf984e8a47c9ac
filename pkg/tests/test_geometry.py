import math

import numpy as np
import pytest

from petalgrow.mesh import (
    BoundaryEdgeError,
    Mesh,
    build_mesh,
    circumcenters,
    dihedral_angle,
    dihedral_angles,
    face_geometry,
    vertex_normal,
    vertex_normals,
)


def single(positions) -> Mesh:  # type: ignore
    return build_mesh(positions, [(0, 1, 2)])


class TestFaceGeometry:
    def test_equilateral(self) -> None:
        mesh = single([(0, 0, 0), (1, 0, 0), (0.5, math.sqrt(3) / 2, 0)])
        g = face_geometry(mesh, 0)
        assert g.area == pytest.approx(math.sqrt(3) / 4)
        assert g.circumradius == pytest.approx(1 / math.sqrt(3))
        assert g.quality == pytest.approx(1.0)
        assert np.allclose(g.circumcenter, g.barycenter)
        assert np.allclose(g.normal, (0, 0, 1))

    def test_right_isosceles(self) -> None:
        mesh = single([(0, 0, 0), (1, 0, 0), (0, 1, 0)])
        g = face_geometry(mesh, 0)
        assert np.allclose(g.circumcenter, (0.5, 0.5, 0))
        assert g.circumradius == pytest.approx(math.sqrt(2) / 2)

    def test_three_four_five(self) -> None:
        mesh = single([(0, 0, 0), (4, 0, 0), (0, 3, 0)])
        g = face_geometry(mesh, 0)
        assert g.area == pytest.approx(6.0)
        assert g.circumradius == pytest.approx(2.5)
        assert g.quality == pytest.approx(4 * math.sqrt(3) * 6 / 50)

    def test_degenerate_face_has_finite_center(self) -> None:
        pos = np.array([(0, 0, 0), (1, 0, 0), (2, 0, 0)], dtype=float)
        centers, radii = circumcenters(pos, np.array([[0, 1, 2]]), eps_area=1e-12)
        assert np.all(np.isfinite(centers))
        assert np.allclose(centers[0], (1, 0, 0))


class TestDihedral:
    def test_flat_square(self, unit_square: Mesh) -> None:
        assert dihedral_angle(unit_square, unit_square.find_edge(0, 2)) == 0.0

    def test_right_angle_fold(self) -> None:
        h = math.sqrt(0.5)
        mesh = build_mesh(
            [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0.5, 0.5, h)], [(0, 1, 2), (0, 2, 3)]
        )
        theta = dihedral_angle(mesh, mesh.find_edge(0, 2))
        assert abs(theta) == pytest.approx(math.pi / 2)

    def test_random_hinges_match_normals(self) -> None:
        rng = np.random.default_rng(5)
        for _ in range(20):
            positions = rng.normal(size=(4, 3))
            mesh = build_mesh(positions, [(0, 1, 2), (1, 0, 3)])
            theta = dihedral_angle(mesh, mesh.find_edge(0, 1))
            p = mesh.positions
            n1 = np.cross(p[1] - p[0], p[2] - p[0])
            n2 = np.cross(p[0] - p[1], p[3] - p[1])
            cos = n1 @ n2 / (np.linalg.norm(n1) * np.linalg.norm(n2))
            assert abs(theta) == pytest.approx(math.acos(np.clip(cos, -1, 1)), abs=1e-9)

    def test_sign_flips_with_fold_direction(self) -> None:
        up = build_mesh(
            [(0, 0, 0), (1, 0, 0), (0.5, 1, 0), (0.5, -1, 0.5)], [(0, 1, 2), (1, 0, 3)]
        )
        down = build_mesh(
            [(0, 0, 0), (1, 0, 0), (0.5, 1, 0), (0.5, -1, -0.5)], [(0, 1, 2), (1, 0, 3)]
        )
        a = dihedral_angle(up, 0)
        b = dihedral_angle(down, 0)
        assert a == pytest.approx(-b)
        assert a != 0.0

    def test_boundary_edge(self, unit_square: Mesh) -> None:
        with pytest.raises(BoundaryEdgeError):
            dihedral_angle(unit_square, unit_square.find_edge(0, 1))

    def test_vectorised_view(self, wavy_disk: Mesh) -> None:
        edges, theta = dihedral_angles(wavy_disk)
        for e, t in zip(edges.tolist(), theta.tolist()):
            assert t == pytest.approx(dihedral_angle(wavy_disk, e))


class TestVertexNormal:
    def test_flat_fan(self, hexagon_fan: Mesh) -> None:
        assert np.allclose(vertex_normal(hexagon_fan, 0), (0, 0, 1))

    def test_pyramid_apex(self, hexagon_fan: Mesh) -> None:
        hexagon_fan.positions[0] = (0, 0, 0.7)
        assert np.allclose(vertex_normal(hexagon_fan, 0), (0, 0, 1))

    def test_matches_brute_force(self, wavy_disk: Mesh) -> None:
        normals = vertex_normals(wavy_disk)
        pos = wavy_disk.positions
        for v in wavy_disk.vertices():
            total = np.zeros(3)
            for f in wavy_disk.vertex_faces(v):
                a, b, c = wavy_disk.face_vertices(f)
                total += np.cross(pos[b] - pos[a], pos[c] - pos[a])
            assert np.allclose(normals[v], total / np.linalg.norm(total))
            assert np.allclose(vertex_normal(wavy_disk, v), normals[v])
