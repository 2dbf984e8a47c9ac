from typing import Literal

# evaluate each pair once from the lower handle, or once from each end
PairMode = Literal['symmetric', 'both-orders']
