from .failure import detect_failure
from .intersections import (
    brute_force_intersections,
    count_self_intersections,
    intersecting_pairs,
    triangles_intersect,
)
from .metrics import mean_valence, metrics
from .models import FailureStatus, MetricsReport

__all__ = (
    'FailureStatus',
    'MetricsReport',

    'triangles_intersect',
    'intersecting_pairs',
    'count_self_intersections',
    'brute_force_intersections',
    'mean_valence',
    'metrics',
    'detect_failure',
)
