from __future__ import annotations

import attr

from ..setting import SimConfig
from ..setting.typing import ScheduleKind
from .exceptions import InvalidScheduleError

__all__ = 'BendingSchedule', 'bending_coefficient'


@attr.s(auto_attribs=True, slots=True, frozen=True)
class BendingSchedule:
    kind: ScheduleKind = 'ramp'
    kmin: float = 0.005
    kmax: float = 0.03
    ramp_steps: int = 50

    def __attrs_post_init__(self) -> None:
        if not 0.0 <= self.kmin <= self.kmax:
            raise InvalidScheduleError(
                f'need 0 <= kmin <= kmax, got kmin={self.kmin}, kmax={self.kmax}'
            )
        if self.ramp_steps < 0:
            raise InvalidScheduleError(f'negative ramp length: {self.ramp_steps}')

    @classmethod
    def from_config(cls, config: SimConfig) -> BendingSchedule:
        return cls(
            kind=config.bending_schedule,
            kmin=config.bending_kmin,
            kmax=config.bending_kmax,
            ramp_steps=config.bending_ramp_steps,
        )


def bending_coefficient(schedule: BendingSchedule, step: int) -> float:
    """Linear ramp from `kmin` at step 0 to `kmax` at `ramp_steps`, flat after."""
    if step < 0:
        raise InvalidScheduleError(f'negative step: {step}')
    if schedule.kind == 'constant' or step >= schedule.ramp_steps:
        return schedule.kmax
    fraction = step / schedule.ramp_steps
    return schedule.kmin + fraction * (schedule.kmax - schedule.kmin)
