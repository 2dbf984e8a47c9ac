from .collapse import collapse_pass
from .ears import ear_removal_pass, ear_tips
from .flip import delaunay_flip_pass, opposite_angle_sum
from .models import PassResult, SubdivisionOutcome
from .subdivide import split_position, split_thresholds, subdivide_pass
from .typing import InteriorSplit, SplitLengthMode

__all__ = (
    'PassResult',
    'SubdivisionOutcome',
    'SplitLengthMode',
    'InteriorSplit',

    'split_thresholds',
    'split_position',
    'subdivide_pass',
    'opposite_angle_sum',
    'delaunay_flip_pass',
    'collapse_pass',
    'ear_tips',
    'ear_removal_pass',
)
