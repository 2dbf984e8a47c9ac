from typing import Literal

# reference length in the split threshold: the rest length or the edge itself
SplitLengthMode = Literal['rest', 'self']
InteriorSplit = Literal['loop', 'midpoint']
