from __future__ import annotations

import numpy as np

from ..growth import GrowthField
from ..mesh import Mesh
from .models import ExternalForceSpec, ForceField
from .typing import Weighting

__all__ = ('external_forces',)


def _weights(g: np.ndarray, weighting: Weighting) -> np.ndarray:
    if weighting == 'growth':
        return g
    if weighting == 'one-minus-growth':
        return 1.0 - g
    return np.ones_like(g)


def external_forces(
    mesh: Mesh, field: GrowthField, spec: ExternalForceSpec
) -> ForceField:
    handles = mesh.vertex_handles()
    if spec.is_zero:
        return ForceField.zeros(handles)

    g = field.by_slot(mesh.num_vertex_slots)[handles]
    pos = mesh.positions[handles]
    forces = _weights(g, spec.gravity_weighting)[:, None] * spec.gravity[None, :]
    if spec.rotation_strength > 0.0:
        swirl = np.cross(spec.unit_axis, pos - spec.rotation_center)
        weight = spec.rotation_strength * _weights(g, spec.rotation_weighting)
        forces = forces + weight[:, None] * swirl
    return ForceField(handles=handles, forces=forces)
