from __future__ import annotations

from typing import Optional

import numpy as np

from .exceptions import InvalidParamsError
from .models import GrowthField, GrowthParams

__all__ = 'growth_function', 'growth_factors'


def growth_function(x: np.ndarray, params: GrowthParams) -> np.ndarray:
    """
    Two-branch easing curve on [0, 1].

    Below the cutoff `p` the curve is `p * (x / p) ** c`, above it the point
    reflection of that shape, so that g(0) = 0, g(p) = p, g(1) = 1 and the
    slope at `p` is `c` from both sides.
    """
    p = params.cutoff
    c = params.exponent
    x = np.clip(np.asarray(x, dtype=np.float64), 0.0, 1.0)
    low = p * (x / p) ** c
    high = 1.0 - (1.0 - p) * ((1.0 - x) / (1.0 - p)) ** c
    return np.where(x <= p, low, high)


def growth_factors(
    distances: np.ndarray,
    params: GrowthParams,
    handles: Optional[np.ndarray] = None,
) -> GrowthField:
    d = np.asarray(distances, dtype=np.float64)
    if d.size and (not np.all(np.isfinite(d)) or d.min() < 0.0):
        raise InvalidParamsError('distances must be finite and non-negative')
    if handles is None:
        handles = np.arange(len(d))

    top = float(d.max()) if d.size else 0.0
    normalized = d / top if top > 0.0 else np.zeros_like(d)
    x = 1.0 - normalized if params.high_at_sources else normalized
    return GrowthField(
        handles=np.asarray(handles, dtype=np.int64),
        distances=d,
        normalized=normalized,
        factors=growth_function(x, params),
    )
