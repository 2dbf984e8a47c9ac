from ..exception import PetalgrowError

__all__ = 'SimulationError', 'InvalidScheduleError', 'StepFailure'


class SimulationError(PetalgrowError):
    ...


class InvalidScheduleError(SimulationError, ValueError):
    ...


class StepFailure(SimulationError):
    """A step left the mesh unusable; the state is kept for post-mortem export."""

    def __init__(self, reason: str, step: int) -> None:
        super().__init__(f'step {step} failed: {reason}')
        self.reason = reason
        self.step = step
