from .exceptions import FairingError, MalformedBoundaryError
from .smoothing import (
    boundary_targets,
    interior_targets,
    smooth_boundary,
    smooth_interior,
    smooth_subset,
)

__all__ = (
    'interior_targets',
    'boundary_targets',
    'smooth_interior',
    'smooth_boundary',
    'smooth_subset',

    'FairingError',
    'MalformedBoundaryError',
)
