from typing import Literal

SourcePolicyKind = Literal['all-boundary', 'explicit', 'random-boundary']
GeodesicSolver = Literal['graph', 'heat']
