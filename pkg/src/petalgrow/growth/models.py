from __future__ import annotations

from typing import Tuple

import attr
import numpy as np

from .exceptions import InvalidParamsError
from .typing import SourcePolicyKind

__all__ = 'GrowthParams', 'SourcePolicy', 'SourceSet', 'GrowthField'


def _open_unit_interval(instance, attribute, value):  # type: ignore
    if not 0.0 < value < 1.0:
        raise InvalidParamsError(f"'{attribute.name}' must lie in (0, 1): {value}")


def _half_open_unit_interval(instance, attribute, value):  # type: ignore
    if not 0.0 <= value < 1.0:
        raise InvalidParamsError(f"'{attribute.name}' must lie in [0, 1): {value}")


@attr.s(auto_attribs=True, slots=True, frozen=True)
class GrowthParams:
    cutoff: float = attr.ib(default=0.5, validator=[_open_unit_interval])
    steepness: float = attr.ib(default=0.5, validator=[_half_open_unit_interval])
    high_at_sources: bool = True

    @property
    def exponent(self) -> float:
        return 2.0 / (1.0 - self.steepness) - 1.0


@attr.s(auto_attribs=True, slots=True, frozen=True)
class SourcePolicy:
    kind: SourcePolicyKind = 'all-boundary'
    vertices: Tuple[int, ...] = ()  # explicit policy only
    count: int = 4  # random-boundary policy only
    seed: int = 0


@attr.s(auto_attribs=True, slots=True, frozen=True)
class SourceSet:
    vertices: Tuple[int, ...]
    policy: SourcePolicy

    def __len__(self) -> int:
        return len(self.vertices)


@attr.s(auto_attribs=True, slots=True, frozen=True, eq=False)
class GrowthField:
    # all arrays are aligned with `handles` (live vertex handles, ascending)
    handles: np.ndarray
    distances: np.ndarray
    normalized: np.ndarray
    factors: np.ndarray

    def __len__(self) -> int:
        return len(self.handles)

    def by_slot(self, num_slots: int) -> np.ndarray:
        """Growth factors scattered into a handle-indexed array (0 elsewhere)."""
        out = np.zeros(num_slots)
        out[self.handles] = self.factors
        return out

    def extended(self, handles: np.ndarray, factors: np.ndarray) -> GrowthField:
        """Return a field with extra vertices appended (distances unknown)."""
        if len(handles) == 0:
            return self
        nan = np.full(len(handles), np.nan)
        return GrowthField(
            handles=np.concatenate([self.handles, handles]),
            distances=np.concatenate([self.distances, nan]),
            normalized=np.concatenate([self.normalized, nan]),
            factors=np.concatenate([self.factors, factors]),
        )

    @classmethod
    def uniform(cls, handles: np.ndarray, value: float) -> GrowthField:
        n = len(handles)
        return cls(
            handles=np.asarray(handles, dtype=np.int64),
            distances=np.zeros(n),
            normalized=np.zeros(n),
            factors=np.full(n, float(value)),
        )
