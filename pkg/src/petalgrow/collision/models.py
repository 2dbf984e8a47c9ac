from __future__ import annotations

from typing import Tuple

import attr
import numpy as np

from ..shell import ForceField

__all__ = 'ColliderSet', 'CollisionOutcome'


@attr.s(auto_attribs=True, slots=True, frozen=True, eq=False)
class ColliderSet:
    # aligned with `handles` (live vertex handles, ascending)
    handles: np.ndarray
    normal_radii: np.ndarray
    tangent_radii: np.ndarray
    normals: np.ndarray

    def __len__(self) -> int:
        return len(self.handles)

    @property
    def reach(self) -> float:
        """Largest distance at which two colliders can overlap."""
        if len(self.handles) == 0:
            return 0.0
        return float(max(self.normal_radii.max(), self.tangent_radii.max()))


@attr.s(auto_attribs=True, slots=True, frozen=True, eq=False)
class CollisionOutcome:
    handles: np.ndarray
    raw_forces: np.ndarray  # pair forces before the 1-ring blend
    forces: np.ndarray
    involved: Tuple[int, ...]
    events: int
    coincident: int = 0

    def as_field(self) -> ForceField:
        return ForceField(handles=self.handles, forces=self.forces)
