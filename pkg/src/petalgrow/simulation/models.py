from __future__ import annotations

from enum import Enum
from typing import List, Optional, Tuple

import attr

from ..analysis import MetricsReport
from ..growth import GrowthField, SourceSet
from ..mesh import Mesh
from ..shell import RestState
from .schedule import BendingSchedule

__all__ = 'StopReason', 'StepReport', 'SimState', 'Frame', 'RunResult'


class StopReason(Enum):
    VERTEX_BUDGET = 'vertex budget'
    STEP_BUDGET = 'step budget'
    FAILURE = 'failure'

    def __str__(self) -> str:
        return self.value


@attr.s(auto_attribs=True, slots=True, frozen=True)
class StepReport:
    step: int
    splits: int
    flips: int
    collapses: int
    ears: int
    collision_events: int
    vertex_count: int
    edge_count: int
    face_count: int
    k_b: float
    wall_ms: float
    refused_flips: int = 0
    refused_collapses: int = 0

    def format(self) -> str:
        return (
            f'step {self.step}: V={self.vertex_count} E={self.edge_count} '
            f'F={self.face_count} splits={self.splits} flips={self.flips} '
            f'collapses={self.collapses} ears={self.ears} '
            f'collisions={self.collision_events} k_b={self.k_b:.6g} '
            f'wall_ms={self.wall_ms:.3f}'
        )


@attr.s(auto_attribs=True, slots=True)
class SimState:
    mesh: Mesh
    rest: RestState = attr.ib(on_setattr=attr.setters.frozen)
    schedule: BendingSchedule
    step: int = 0
    reports: List[StepReport] = attr.ib(factory=list)
    sources: Optional[SourceSet] = None  # kept across steps unless reselected
    field: Optional[GrowthField] = None

    @property
    def rest_length(self) -> float:
        return self.rest.rest_length


@attr.s(auto_attribs=True, slots=True, frozen=True)
class Frame:
    step: int
    mesh: Mesh
    metrics: MetricsReport
    report: Optional[StepReport] = None  # None for the initial frame
    k_b: float = 0.0
    failing: bool = False


@attr.s(auto_attribs=True, slots=True, frozen=True)
class RunResult:
    mesh: Mesh
    stop_reason: StopReason
    steps: int
    reports: Tuple[StepReport, ...]
    metrics: Tuple[Tuple[int, MetricsReport], ...]  # (step, report) per frame
    digest: str
    failure: Optional[str] = None
    elapsed: float = 0.0

    @property
    def failed(self) -> bool:
        return self.stop_reason is StopReason.FAILURE

    @property
    def final_metrics(self) -> Optional[MetricsReport]:
        return self.metrics[-1][1] if self.metrics else None
