from __future__ import annotations

import math
from typing import Sequence

import attr
import numpy as np

from .exceptions import InvalidForceSpecError
from .typing import Weighting

__all__ = 'RestState', 'ForceField', 'ExternalForceSpec'


def _positive(instance, attribute, value):  # type: ignore
    if not value > 0.0:
        raise InvalidForceSpecError(f"'{attribute.name}' must be positive: {value}")


def _non_negative(instance, attribute, value):  # type: ignore
    if not value >= 0.0:
        raise InvalidForceSpecError(
            f"'{attribute.name}' must not be negative: {value}"
        )


def _vector(value: Sequence[float]) -> np.ndarray:
    arr = np.array(value, dtype=np.float64)
    if arr.shape != (3,):
        raise InvalidForceSpecError(f'expected a 3-vector: {value}')
    return arr


@attr.s(auto_attribs=True, slots=True, frozen=True)
class RestState:
    rest_length: float = attr.ib(validator=[_positive])
    stretch_stiffness: float = attr.ib(default=2.0, validator=[_positive])
    bending_stiffness: float = attr.ib(default=0.0, validator=[_non_negative])
    rest_angle: float = 0.0

    @property
    def rest_area(self) -> float:
        # equilateral face of side L0; no force uses it
        return math.sqrt(3.0) / 4.0 * self.rest_length ** 2


@attr.s(auto_attribs=True, slots=True, frozen=True, eq=False)
class ForceField:
    handles: np.ndarray  # live vertex handles, ascending
    forces: np.ndarray  # (len(handles), 3)
    skipped: int = 0  # degenerate elements left out of the assembly

    def __len__(self) -> int:
        return len(self.handles)

    def __add__(self, other: ForceField) -> ForceField:
        if not np.array_equal(self.handles, other.handles):
            raise ValueError('force fields are not aligned')
        return ForceField(
            handles=self.handles,
            forces=self.forces + other.forces,
            skipped=self.skipped + other.skipped,
        )

    @classmethod
    def zeros(cls, handles: np.ndarray) -> ForceField:
        return cls(handles=handles, forces=np.zeros((len(handles), 3)))

    @classmethod
    def from_slots(
        cls, handles: np.ndarray, slots: np.ndarray, skipped: int = 0
    ) -> ForceField:
        return cls(handles=handles, forces=slots[handles], skipped=skipped)

    def by_slot(self, num_slots: int) -> np.ndarray:
        out = np.zeros((num_slots, 3))
        out[self.handles] = self.forces
        return out

    def total(self) -> np.ndarray:
        return self.forces.sum(axis=0)

    def max_magnitude(self) -> float:
        if len(self.forces) == 0:
            return 0.0
        return float(np.linalg.norm(self.forces, axis=1).max())


@attr.s(auto_attribs=True, slots=True, frozen=True, eq=False)
class ExternalForceSpec:
    gravity: np.ndarray = attr.ib(factory=lambda: np.zeros(3), converter=_vector)
    rotation_axis: np.ndarray = attr.ib(
        factory=lambda: np.array([0.0, 0.0, 1.0]), converter=_vector
    )
    rotation_center: np.ndarray = attr.ib(factory=lambda: np.zeros(3), converter=_vector)
    rotation_strength: float = attr.ib(default=0.0, validator=[_non_negative])
    gravity_weighting: Weighting = 'one-minus-growth'
    rotation_weighting: Weighting = 'growth'

    def __attrs_post_init__(self) -> None:
        if self.rotation_strength > 0.0 and not np.linalg.norm(self.rotation_axis) > 0:
            raise InvalidForceSpecError('rotation needs a non-zero axis')

    @property
    def unit_axis(self) -> np.ndarray:
        norm = np.linalg.norm(self.rotation_axis)
        return self.rotation_axis / norm if norm > 0 else self.rotation_axis

    @property
    def is_zero(self) -> bool:
        return not np.any(self.gravity) and self.rotation_strength == 0.0
