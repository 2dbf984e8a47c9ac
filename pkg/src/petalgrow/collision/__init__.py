from .corrective import build_colliders, corrective_collision, penetration
from .exceptions import CollisionError, InvalidColliderError
from .growth_collision import growth_collision
from .models import ColliderSet, CollisionOutcome
from .spatial_index import SpatialIndex, spatial_index
from .typing import PairMode

__all__ = (
    'ColliderSet',
    'CollisionOutcome',
    'SpatialIndex',
    'PairMode',

    'spatial_index',
    'build_colliders',
    'penetration',
    'corrective_collision',
    'growth_collision',

    'CollisionError',
    'InvalidColliderError',
)
