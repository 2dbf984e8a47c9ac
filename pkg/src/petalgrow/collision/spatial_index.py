from __future__ import annotations

import itertools
import math
from typing import Dict, List, Optional, Tuple

import numpy as np

__all__ = 'SpatialIndex', 'spatial_index'


class SpatialIndex:
    """
    Uniform grid over points.

    Points are bucketed by the integer cell `floor(p / cell)`; each bucket
    keeps its members in ascending handle order.  Queries return supersets
    of the true neighbourhoods, the `exact` variants filter by distance.
    """

    def __init__(
        self,
        positions: np.ndarray,
        cell: float,
        handles: Optional[np.ndarray] = None,
    ) -> None:
        if not cell > 0.0:
            raise ValueError(f'cell size must be positive: {cell}')
        pos = np.asarray(positions, dtype=np.float64).reshape(-1, 3)
        if not np.all(np.isfinite(pos)):
            raise ValueError('positions must be finite')
        self._cell = float(cell)
        self._positions = pos
        if handles is None:
            handles = np.arange(len(pos))
        self._handles = np.asarray(handles, dtype=np.int64)

        cells = np.floor(pos / self._cell).astype(np.int64)
        order = np.lexsort((self._handles, cells[:, 2], cells[:, 1], cells[:, 0]))
        sorted_cells = cells[order]
        if len(order):
            change = np.any(np.diff(sorted_cells, axis=0) != 0, axis=1)
            starts = np.concatenate([[0], np.flatnonzero(change) + 1])
        else:
            starts = np.zeros(0, dtype=np.int64)
        ends = np.concatenate([starts[1:], [len(order)]]).astype(np.int64)

        self._order = order
        self._bucket_cells = sorted_cells[starts] if len(order) else sorted_cells
        self._buckets: Dict[Tuple[int, int, int], Tuple[int, int]] = {
            (int(c[0]), int(c[1]), int(c[2])): (int(s), int(e))
            for c, s, e in zip(self._bucket_cells, starts, ends)
        }

    @property
    def cell(self) -> float:
        return self._cell

    @property
    def handles(self) -> np.ndarray:
        return self._handles

    def __len__(self) -> int:
        return len(self._positions)

    def _members(self, key: Tuple[int, int, int]) -> np.ndarray:
        span = self._buckets.get(key)
        if span is None:
            return np.zeros(0, dtype=np.int64)
        return self._order[span[0]:span[1]]

    def query(self, point: np.ndarray, radius: float) -> np.ndarray:
        """Indices of points in every cell touched by the ball's bounding box."""
        p = np.asarray(point, dtype=np.float64)
        lo = np.floor((p - radius) / self._cell).astype(np.int64)
        hi = np.floor((p + radius) / self._cell).astype(np.int64)
        found: List[np.ndarray] = []
        for cx in range(lo[0], hi[0] + 1):
            for cy in range(lo[1], hi[1] + 1):
                for cz in range(lo[2], hi[2] + 1):
                    members = self._members((cx, cy, cz))
                    if len(members):
                        found.append(members)
        if not found:
            return np.zeros(0, dtype=np.int64)
        idx = np.concatenate(found)
        return idx[np.argsort(self._handles[idx], kind='stable')]

    def query_exact(self, point: np.ndarray, radius: float) -> np.ndarray:
        idx = self.query(point, radius)
        d = self._positions[idx] - np.asarray(point, dtype=np.float64)
        return idx[np.einsum('ij,ij->i', d, d) <= radius * radius]

    def candidate_pairs(self, radius: float) -> Tuple[np.ndarray, np.ndarray]:
        """
        Index pairs `(i, j)` whose cells are within reach of `radius`.

        Every unordered pair appears once with `handles[i] < handles[j]`,
        sorted by `(handles[i], handles[j])`.
        """
        reach = max(1, int(math.ceil(radius / self._cell)))
        span = range(-reach, reach + 1)
        offsets = [o for o in itertools.product(span, span, span) if o > (0, 0, 0)]

        first: List[np.ndarray] = []
        second: List[np.ndarray] = []
        for key, (s, e) in self._buckets.items():
            members = self._order[s:e]
            if len(members) > 1:
                a, b = np.triu_indices(len(members), k=1)
                first.append(members[a])
                second.append(members[b])
            for ox, oy, oz in offsets:
                other = self._members((key[0] + ox, key[1] + oy, key[2] + oz))
                if len(other):
                    first.append(np.repeat(members, len(other)))
                    second.append(np.tile(other, len(members)))

        if not first:
            empty = np.zeros(0, dtype=np.int64)
            return empty, empty
        i = np.concatenate(first)
        j = np.concatenate(second)
        swap = self._handles[i] > self._handles[j]
        i[swap], j[swap] = j[swap], i[swap]
        order = np.lexsort((self._handles[j], self._handles[i]))
        return i[order], j[order]

    def pairs(self, radius: float) -> Tuple[np.ndarray, np.ndarray]:
        """Index pairs at distance at most `radius`, in handle order."""
        i, j = self.candidate_pairs(radius)
        d = self._positions[j] - self._positions[i]
        keep = np.einsum('ij,ij->i', d, d) <= radius * radius
        return i[keep], j[keep]


def spatial_index(
    positions: np.ndarray, cell: float, handles: Optional[np.ndarray] = None
) -> SpatialIndex:
    return SpatialIndex(positions, cell, handles)
