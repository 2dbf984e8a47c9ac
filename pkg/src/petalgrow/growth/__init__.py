from .exceptions import (
    DisconnectedComponentWithoutSourceError,
    EmptyBoundaryError,
    GrowthError,
    InvalidParamsError,
)
from .factors import growth_factors, growth_function
from .geodesic import geodesic_distances, graph_distances, heat_distances
from .models import GrowthField, GrowthParams, SourcePolicy, SourceSet
from .sources import select_sources
from .typing import GeodesicSolver, SourcePolicyKind

__all__ = (
    'GrowthParams',
    'GrowthField',
    'SourcePolicy',
    'SourceSet',
    'SourcePolicyKind',
    'GeodesicSolver',

    'select_sources',
    'geodesic_distances',
    'graph_distances',
    'heat_distances',
    'growth_function',
    'growth_factors',

    'GrowthError',
    'InvalidParamsError',
    'EmptyBoundaryError',
    'DisconnectedComponentWithoutSourceError',
)
