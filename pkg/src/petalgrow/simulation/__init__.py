from .exceptions import InvalidScheduleError, SimulationError, StepFailure
from .models import Frame, RunResult, SimState, StepReport, StopReason
from .recorder import METRICS_COLUMNS, RunRecorder, metrics_row
from .runner import Simulation, initial_state, run
from .schedule import BendingSchedule, bending_coefficient
from .step import current_sources, step

__all__ = (
    'BendingSchedule',
    'bending_coefficient',

    'SimState',
    'StepReport',
    'StopReason',
    'Frame',
    'RunResult',

    'initial_state',
    'current_sources',
    'step',
    'Simulation',
    'run',

    'METRICS_COLUMNS',
    'metrics_row',
    'RunRecorder',

    'SimulationError',
    'InvalidScheduleError',
    'StepFailure',
)
