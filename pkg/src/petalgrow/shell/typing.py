from typing import Literal

# how a per-vertex force term is scaled by the growth factor g
Weighting = Literal['growth', 'one-minus-growth', 'uniform']
