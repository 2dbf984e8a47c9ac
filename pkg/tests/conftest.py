import math
from typing import Callable, List, Tuple

import numpy as np
import pytest

from petalgrow.generators import GeneratorSpec, generate_initial
from petalgrow.mesh import Mesh, build_mesh

SQRT3 = math.sqrt(3.0)


@pytest.fixture
def triangle() -> Mesh:
    return build_mesh([(0, 0, 0), (1, 0, 0), (0, 1, 0)], [(0, 1, 2)])


@pytest.fixture
def unit_square() -> Mesh:
    return build_mesh(
        [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)], [(0, 1, 2), (0, 2, 3)]
    )


def hexagon_fan_mesh(radius: float = 1.0) -> Mesh:
    angles = np.arange(6) * math.pi / 3.0
    ring = [(radius * math.cos(a), radius * math.sin(a), 0.0) for a in angles]
    triangles = [(0, 1 + k, 1 + (k + 1) % 6) for k in range(6)]
    return build_mesh([(0.0, 0.0, 0.0)] + ring, triangles)


@pytest.fixture
def hexagon_fan() -> Mesh:
    return hexagon_fan_mesh()


def lattice_mesh(rings: int = 2) -> Mesh:
    """Regular hexagonal patch of the unit triangular lattice."""
    index = {}
    positions: List[Tuple[float, float, float]] = []
    for a in range(-rings, rings + 1):
        for b in range(-rings, rings + 1):
            if max(abs(a), abs(b), abs(a + b)) > rings:
                continue
            index[(a, b)] = len(positions)
            positions.append((a + 0.5 * b, 0.5 * SQRT3 * b, 0.0))

    triangles = []
    for (a, b), i in index.items():
        up = (index.get((a + 1, b)), index.get((a, b + 1)))
        if None not in up:
            triangles.append((i, up[0], up[1]))
        down = (index.get((a + 1, b)), index.get((a + 1, b + 1)), index.get((a, b + 1)))
        if None not in down:
            triangles.append((down[0], down[1], down[2]))
    return build_mesh(positions, triangles)


@pytest.fixture
def lattice() -> Mesh:
    return lattice_mesh()


def strip_mesh(length: int = 10, width: int = 1, spacing: float = 1.0) -> Mesh:
    """Triangulated rectangle of `length` by `width` cells."""
    rows = width + 1

    def vid(i: int, k: int) -> int:
        return i * rows + k

    positions = [
        (i * spacing, k * spacing, 0.0)
        for i in range(length + 1)
        for k in range(rows)
    ]
    triangles = []
    for i in range(length):
        for k in range(width):
            triangles.append((vid(i, k), vid(i + 1, k), vid(i + 1, k + 1)))
            triangles.append((vid(i, k), vid(i + 1, k + 1), vid(i, k + 1)))
    return build_mesh(positions, triangles)


@pytest.fixture
def strip() -> Callable[..., Mesh]:
    return strip_mesh


@pytest.fixture
def flat_disk() -> Mesh:
    return generate_initial(
        GeneratorSpec(kind='disk', radial=3, angular=18, perturbation=0.0)
    )


@pytest.fixture
def wavy_disk() -> Mesh:
    return generate_initial(
        GeneratorSpec(kind='disk', radial=3, angular=18, perturbation=0.2, seed=3)
    )
