from __future__ import annotations

import time
from typing import List, Optional, Tuple

import humanize
from loguru import logger
from reactivex import Observable, Subject
from tqdm import tqdm

from ..analysis import MetricsReport, metrics
from ..mesh import Mesh
from ..setting import SimConfig
from ..utils.hash import vertex_digest
from .exceptions import StepFailure
from .models import Frame, RunResult, SimState, StepReport, StopReason
from .schedule import BendingSchedule, bending_coefficient
from .step import step

__all__ = 'Simulation', 'initial_state', 'run'


def initial_state(mesh: Mesh, config: SimConfig) -> SimState:
    """Fix the rest length to the mean edge length of the initial mesh."""
    rest_length = mesh.mean_edge_length()
    schedule = BendingSchedule.from_config(config)
    return SimState(
        mesh=mesh,
        rest=config.rest_state(rest_length, bending_coefficient(schedule, 0)),
        schedule=schedule,
    )


class Simulation:
    """
    A growth run over one mesh.

    Step reports, exported frames and the final result are published on
    subjects; persistence subscribes to them.
    """

    def __init__(self, mesh: Mesh, config: SimConfig, *, label: str = '') -> None:
        self._config = config
        self._state = initial_state(mesh, config)
        self._label = label
        self._logger = logger.bind(run=label)
        self._step_reports: Subject[StepReport] = Subject()
        self._frames: Subject[Frame] = Subject()
        self._finished: Subject[RunResult] = Subject()
        self._metrics: List[Tuple[int, MetricsReport]] = []
        self._last_export: int = -1

    @property
    def config(self) -> SimConfig:
        return self._config

    @property
    def state(self) -> SimState:
        return self._state

    @property
    def step_reports(self) -> Observable[StepReport]:
        return self._step_reports

    @property
    def frames(self) -> Observable[Frame]:
        return self._frames

    @property
    def finished(self) -> Observable[RunResult]:
        return self._finished

    def step(self) -> StepReport:
        report = step(self._state, self._config)
        self._step_reports.on_next(report)
        return report

    def run(self, *, progress: bool = False) -> RunResult:
        config = self._config
        state = self._state
        self._logger.info(
            f'Growing {humanize.intcomma(state.mesh.vertex_count)} vertices, '
            f'L0 = {state.rest_length:.6g}, method {config.method}, seed {config.seed}'
        )
        start = time.monotonic()
        self._export(None)

        failure: Optional[StepFailure] = None
        reason: Optional[StopReason] = None
        with tqdm(
            desc=self._label or 'growing',
            total=config.max_steps,
            unit='step',
            disable=not progress,
        ) as pbar:
            while True:
                reason = self._budget_reason()
                if reason is not None:
                    break
                last_valid = state.mesh.copy()
                try:
                    report = self.step()
                except StepFailure as exc:
                    failure = exc
                    reason = StopReason.FAILURE
                    self._export_failure(last_valid, exc)
                    break
                pbar.update()
                pbar.set_postfix(V=report.vertex_count)
                if config.export_every and state.step % config.export_every == 0:
                    self._export(report)

        if failure is None and self._last_export != state.step:
            self._export(state.reports[-1] if state.reports else None)

        assert reason is not None
        elapsed = time.monotonic() - start
        result = RunResult(
            mesh=state.mesh,
            stop_reason=reason,
            steps=state.step,
            reports=tuple(state.reports),
            metrics=tuple(self._metrics),
            digest=vertex_digest(state.mesh),
            failure=failure.reason if failure is not None else None,
            elapsed=elapsed,
        )
        log = self._logger.warning if failure is not None else self._logger.info
        log(
            f'Stopped after {state.step} steps ({reason}) in '
            f'{humanize.naturaldelta(elapsed)}: '
            f'{humanize.intcomma(state.mesh.vertex_count)} vertices, '
            f'digest {result.digest}'
            + (f', {failure.reason}' if failure is not None else '')
        )
        self._finished.on_next(result)
        return result

    def _budget_reason(self) -> Optional[StopReason]:
        if self._state.mesh.vertex_count >= self._config.max_vertices:
            return StopReason.VERTEX_BUDGET
        if self._state.step >= self._config.max_steps:
            return StopReason.STEP_BUDGET
        return None

    def _k_b(self, report: Optional[StepReport]) -> float:
        if report is not None:
            return report.k_b
        return bending_coefficient(self._state.schedule, 0)

    def _export(self, report: Optional[StepReport]) -> None:
        state = self._state
        report_metrics = metrics(state.mesh, state.rest_length)
        self._metrics.append((state.step, report_metrics))
        self._last_export = state.step
        self._frames.on_next(
            Frame(
                step=state.step,
                mesh=state.mesh,
                metrics=report_metrics,
                report=report,
                k_b=self._k_b(report),
            )
        )

    def _export_failure(self, last_valid: Mesh, exc: StepFailure) -> None:
        state = self._state
        self._logger.error(f'{exc}')
        previous = exc.step - 1
        if self._last_export != previous:
            last_report = state.reports[-1] if state.reports else None
            valid_metrics = metrics(last_valid, state.rest_length)
            self._metrics.append((previous, valid_metrics))
            self._frames.on_next(
                Frame(
                    step=previous,
                    mesh=last_valid,
                    metrics=valid_metrics,
                    report=last_report,
                    k_b=self._k_b(last_report),
                )
            )
        failing_metrics = metrics(state.mesh, state.rest_length, intersections=False)
        self._frames.on_next(
            Frame(
                step=exc.step,
                mesh=state.mesh,
                metrics=failing_metrics,
                k_b=bending_coefficient(state.schedule, previous),
                failing=True,
            )
        )
        self._last_export = exc.step


def run(mesh: Mesh, config: SimConfig, *, progress: bool = False) -> RunResult:
    """Run without persistence."""
    return Simulation(mesh, config).run(progress=progress)
