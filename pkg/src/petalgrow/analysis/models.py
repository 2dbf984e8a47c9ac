from __future__ import annotations

from typing import Optional

import attr

__all__ = 'FailureStatus', 'MetricsReport'


@attr.s(auto_attribs=True, slots=True, frozen=True)
class FailureStatus:
    failed: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return not self.failed

    @classmethod
    def ok(cls) -> FailureStatus:
        return cls(failed=False)


@attr.s(auto_attribs=True, slots=True, frozen=True)
class MetricsReport:
    vertex_count: int
    edge_count: int
    face_count: int
    self_intersections: int
    mean_quality: float
    mean_valence: float
    mean_sq_dihedral: float
    sum_sq_dihedral: float
    failure: FailureStatus = attr.ib(factory=FailureStatus.ok)
