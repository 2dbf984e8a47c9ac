from __future__ import annotations

import numpy as np

from ..mesh import Mesh
from .exceptions import NonFiniteForceError
from .models import ForceField

__all__ = ('integrate',)


def integrate(mesh: Mesh, total: ForceField, dt: float) -> None:
    """Overdamped explicit step: every vertex moves by `dt` times its force."""
    if not dt > 0.0:
        raise ValueError(f'time step must be positive: {dt}')
    if not np.array_equal(total.handles, mesh.vertex_handles()):
        raise ValueError('force field is not aligned with the mesh vertices')
    if not np.all(np.isfinite(total.forces)):
        bad = total.handles[~np.all(np.isfinite(total.forces), axis=1)]
        raise NonFiniteForceError(f'non-finite force on vertices {bad[:8].tolist()}')
    mesh.positions[total.handles] += dt * total.forces
