import math

import numpy as np
import pytest

from petalgrow.generators import GeneratorSpec, generate_initial
from petalgrow.growth import GrowthField
from petalgrow.mesh import Mesh, build_mesh
from petalgrow.shell import (
    ExternalForceSpec,
    ForceField,
    InvalidForceSpecError,
    NonFiniteForceError,
    RestState,
    bending_energy,
    bending_forces,
    external_forces,
    integrate,
    stretch_energy,
    stretch_forces,
)


def equilateral(side: float) -> Mesh:
    return build_mesh(
        [(0, 0, 0), (side, 0, 0), (0.5 * side, 0.5 * math.sqrt(3) * side, 0)],
        [(0, 1, 2)],
    )


@pytest.fixture
def bumpy_fan(hexagon_fan: Mesh) -> Mesh:
    rng = np.random.default_rng(2)
    hexagon_fan.positions[:, 2] = rng.uniform(-0.3, 0.3, 7)
    hexagon_fan.positions[:, :2] += rng.uniform(-0.1, 0.1, (7, 2))
    return hexagon_fan


class TestStretch:
    def test_rest_length_gives_no_force(self) -> None:
        mesh = build_mesh([(0, 0, 0), (1, 0, 0), (0, 1, 0)], [(0, 1, 2)])
        rest = RestState(rest_length=1.0)
        forces = stretch_forces(mesh, rest).forces
        # only the hypotenuse is stretched
        assert np.allclose(forces[0], 0.0)

    def test_doubled_edges_pull_inward(self) -> None:
        mesh = equilateral(2.0)
        field = stretch_forces(mesh, RestState(rest_length=1.0, stretch_stiffness=2.0))
        magnitudes = np.linalg.norm(field.forces, axis=1)
        # two springs of force 2 * L0 at sixty degrees
        assert np.allclose(magnitudes, 2.0 * math.sqrt(3.0))
        centroid = mesh.positions[:3].mean(axis=0)
        toward = centroid - mesh.positions[:3]
        assert np.all(np.einsum('ij,ij->i', field.forces, toward) > 0.0)

    def test_equilateral_at_rest(self) -> None:
        mesh = equilateral(1.0)
        rest = RestState(rest_length=mesh.mean_edge_length())
        assert np.allclose(stretch_forces(mesh, rest).forces, 0.0, atol=1e-12)

    def test_momentum_is_conserved(self, bumpy_fan: Mesh) -> None:
        field = stretch_forces(bumpy_fan, RestState(rest_length=0.8))
        assert np.allclose(field.total(), 0.0, atol=1e-12)

    def test_matches_energy_gradient(self, bumpy_fan: Mesh) -> None:
        rest = RestState(rest_length=0.8, stretch_stiffness=2.0)
        forces = stretch_forces(bumpy_fan, rest).forces
        assert np.allclose(forces, -numeric_gradient(bumpy_fan, rest, stretch_energy), atol=1e-6)

    def test_spring_relaxes_monotonically(self) -> None:
        mesh = equilateral(2.0)
        rest = RestState(rest_length=1.0)
        lengths = [mesh.mean_edge_length()]
        for _ in range(50):
            integrate(mesh, stretch_forces(mesh, rest), 0.05)
            lengths.append(mesh.mean_edge_length())
        assert all(a > b for a, b in zip(lengths, lengths[1:]))
        assert lengths[-1] > 1.0
        assert lengths[-1] == pytest.approx(1.0, abs=1e-3)


def shell_forces(mesh: Mesh, rest: RestState) -> ForceField:
    return stretch_forces(mesh, rest) + bending_forces(mesh, rest)


class TestEquilibrium:
    rest = RestState(rest_length=1.0, stretch_stiffness=2.0, bending_stiffness=0.03)

    def test_equilateral_patch_stays_put(self, lattice: Mesh) -> None:
        before = lattice.positions.copy()
        integrate(lattice, shell_forces(lattice, self.rest), 0.01)
        moved = np.linalg.norm(lattice.positions - before, axis=1)
        assert moved.max() < 1e-6 * self.rest.rest_length

    def test_scaled_patch_relaxes_monotonically(self, hexagon_fan: Mesh) -> None:
        hexagon_fan.positions[:] *= 1.5
        errors = [np.abs(hexagon_fan.edge_lengths() - 1.0).mean()]
        for _ in range(200):
            integrate(hexagon_fan, shell_forces(hexagon_fan, self.rest), 0.01)
            errors.append(np.abs(hexagon_fan.edge_lengths() - 1.0).mean())
        assert errors[0] == pytest.approx(0.5)
        assert all(a > b for a, b in zip(errors, errors[1:]))
        assert errors[-1] < 0.1


def numeric_gradient(mesh: Mesh, rest: RestState, energy, h: float = 1e-6) -> np.ndarray:  # type: ignore
    grad = np.zeros((mesh.vertex_count, 3))
    pos = mesh.positions
    for v in range(mesh.vertex_count):
        for k in range(3):
            old = pos[v, k]
            pos[v, k] = old + h
            up = energy(mesh, rest)
            pos[v, k] = old - h
            down = energy(mesh, rest)
            pos[v, k] = old
            grad[v, k] = (up - down) / (2 * h)
    return grad


class TestBending:
    def test_flat_mesh(self, lattice: Mesh) -> None:
        rest = RestState(rest_length=1.0, bending_stiffness=1.0)
        assert np.allclose(bending_forces(lattice, rest).forces, 0.0)
        assert bending_energy(lattice, rest) == 0.0

    @pytest.mark.parametrize('rest_angle', [0.0, 0.2])
    def test_matches_finite_differences(self, bumpy_fan: Mesh, rest_angle: float) -> None:
        rest = RestState(rest_length=1.0, bending_stiffness=0.7, rest_angle=rest_angle)
        analytic = bending_forces(bumpy_fan, rest).forces
        numeric = -numeric_gradient(bumpy_fan, rest, bending_energy)
        error = np.linalg.norm(analytic - numeric) / np.linalg.norm(numeric)
        assert error < 1e-4

    @pytest.mark.parametrize('seed', range(20))
    def test_random_disks_match_finite_differences(self, seed: int) -> None:
        spec = GeneratorSpec(radial=2, angular=12, perturbation=0.4, seed=seed)
        mesh = generate_initial(spec)
        rest = RestState(rest_length=1.0, bending_stiffness=0.03)
        analytic = bending_forces(mesh, rest).forces
        numeric = -numeric_gradient(mesh, rest, bending_energy)
        error = np.linalg.norm(analytic - numeric) / np.linalg.norm(numeric)
        assert error < 1e-4

    def test_folded_square_flattens(self) -> None:
        mesh = build_mesh(
            [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0.3, 0.7, 0.6)], [(0, 1, 2), (0, 2, 3)]
        )
        rest = RestState(rest_length=1.0, bending_stiffness=1.0)
        before = bending_energy(mesh, rest)
        forces = bending_forces(mesh, rest).forces
        assert forces[3, 2] < 0.0
        mesh.positions[:4] += 1e-4 * forces
        assert bending_energy(mesh, rest) < before

    def test_rigid_motion_invariance(self, bumpy_fan: Mesh) -> None:
        rest = RestState(rest_length=1.0, bending_stiffness=1.0)
        forces = bending_forces(bumpy_fan, rest).forces
        assert np.allclose(forces.sum(axis=0), 0.0, atol=1e-10)
        torque = np.cross(bumpy_fan.positions[:7], forces).sum(axis=0)
        assert np.allclose(torque, 0.0, atol=1e-10)

    def test_zero_stiffness(self, bumpy_fan: Mesh) -> None:
        rest = RestState(rest_length=1.0, bending_stiffness=0.0)
        assert not np.any(bending_forces(bumpy_fan, rest).forces)


class TestExternal:
    def test_zero_spec(self, hexagon_fan: Mesh) -> None:
        field = GrowthField.uniform(hexagon_fan.vertex_handles(), 0.5)
        forces = external_forces(hexagon_fan, field, ExternalForceSpec())
        assert not np.any(forces.forces)

    def test_gravity_fades_at_full_growth(self, hexagon_fan: Mesh) -> None:
        spec = ExternalForceSpec(gravity=(0, 0, -1))
        grown = GrowthField.uniform(hexagon_fan.vertex_handles(), 1.0)
        assert not np.any(external_forces(hexagon_fan, grown, spec).forces)
        still = GrowthField.uniform(hexagon_fan.vertex_handles(), 0.0)
        assert np.allclose(external_forces(hexagon_fan, still, spec).forces, (0, 0, -1))

    def test_rotation_on_axis(self, hexagon_fan: Mesh) -> None:
        spec = ExternalForceSpec(rotation_strength=1.0)
        field = GrowthField.uniform(hexagon_fan.vertex_handles(), 1.0)
        forces = external_forces(hexagon_fan, field, spec).forces
        assert np.allclose(forces[0], 0.0)
        assert np.allclose(forces[1], (0, 1, 0))

    def test_rotation_needs_axis(self) -> None:
        with pytest.raises(InvalidForceSpecError):
            ExternalForceSpec(rotation_axis=(0, 0, 0), rotation_strength=1.0)


class TestIntegrate:
    def test_zero_field(self, hexagon_fan: Mesh) -> None:
        before = hexagon_fan.positions.copy()
        integrate(hexagon_fan, ForceField.zeros(hexagon_fan.vertex_handles()), 0.01)
        assert np.array_equal(hexagon_fan.positions, before)

    def test_single_vertex(self, triangle: Mesh) -> None:
        forces = np.zeros((3, 3))
        forces[1] = (1, 0, 0)
        integrate(triangle, ForceField(triangle.vertex_handles(), forces), 0.01)
        assert np.allclose(triangle.positions[1], (1.01, 0, 0))
        assert np.array_equal(triangle.positions[0], np.zeros(3))

    def test_non_finite_force(self, triangle: Mesh) -> None:
        forces = np.zeros((3, 3))
        forces[2] = (np.nan, 0, 0)
        with pytest.raises(NonFiniteForceError):
            integrate(triangle, ForceField(triangle.vertex_handles(), forces), 0.01)
        assert np.all(np.isfinite(triangle.positions))

    def test_non_finite_force_is_arithmetic_error(self) -> None:
        assert issubclass(NonFiniteForceError, ArithmeticError)
