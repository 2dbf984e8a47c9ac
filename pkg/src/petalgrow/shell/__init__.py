from .bending import bending_energy, bending_forces
from .exceptions import InvalidForceSpecError, NonFiniteForceError, ShellError
from .external import external_forces
from .integrate import integrate
from .models import ExternalForceSpec, ForceField, RestState
from .stretch import stretch_energy, stretch_forces
from .typing import Weighting

__all__ = (
    'RestState',
    'ForceField',
    'ExternalForceSpec',
    'Weighting',

    'stretch_forces',
    'stretch_energy',
    'bending_forces',
    'bending_energy',
    'external_forces',
    'integrate',

    'ShellError',
    'NonFiniteForceError',
    'InvalidForceSpecError',
)
