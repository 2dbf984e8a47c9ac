from __future__ import annotations

import csv
import os
from typing import IO, List, Optional

from loguru import logger
from reactivex.disposable import CompositeDisposable

from ..logging import add_step_log, remove_step_log, step_logger
from ..mesh import save_obj
from ..path import config_echo_path, frame_path, frames_dir, metrics_path, step_log_path
from ..setting import SimConfig, dump_config
from .models import Frame, RunResult, StepReport
from .runner import Simulation

__all__ = 'METRICS_COLUMNS', 'RunRecorder', 'metrics_row'


METRICS_COLUMNS = (
    'step',
    'V',
    'E',
    'F',
    'splits',
    'flips',
    'collapses',
    'ears',
    'collision_events',
    'mean_quality',
    'mean_valence',
    'mean_sq_dihedral',
    'self_intersections',
    'k_b',
    'wall_ms',
)


def _number(value: float) -> str:
    return repr(float(value))


def metrics_row(frame: Frame, record_wall_time: bool = False) -> List[str]:
    m = frame.metrics
    r = frame.report
    wall_ms = r.wall_ms if r is not None and record_wall_time else 0.0
    return [
        str(frame.step),
        str(m.vertex_count),
        str(m.edge_count),
        str(m.face_count),
        str(r.splits if r else 0),
        str(r.flips if r else 0),
        str(r.collapses if r else 0),
        str(r.ears if r else 0),
        str(r.collision_events if r else 0),
        _number(m.mean_quality),
        _number(m.mean_valence),
        _number(m.mean_sq_dihedral),
        str(m.self_intersections),
        _number(frame.k_b),
        _number(wall_ms),
    ]


class RunRecorder:
    """
    Persists a simulation into a run directory.

    The directory receives `config.echo`, `frames/frame_%06d.obj`,
    `metrics.csv` (one row per exported frame) and `log.txt` (one line per
    step).
    """

    def __init__(self, run_dir: str, config: SimConfig) -> None:
        self._run_dir = run_dir
        self._config = config
        self._subscriptions = CompositeDisposable()
        self._metrics_file: Optional[IO[str]] = None
        self._step_log_id: Optional[int] = None

    @property
    def run_dir(self) -> str:
        return self._run_dir

    def attach(self, simulation: Simulation) -> None:
        os.makedirs(frames_dir(self._run_dir), exist_ok=True)
        dump_config(self._config, config_echo_path(self._run_dir))

        self._metrics_file = open(
            metrics_path(self._run_dir), 'wt', encoding='utf8', newline=''
        )
        self._writer = csv.writer(self._metrics_file, lineterminator='\n')
        self._writer.writerow(METRICS_COLUMNS)

        self._step_log_id = add_step_log(step_log_path(self._run_dir))
        self._step_logger = step_logger()

        self._subscriptions.add(simulation.step_reports.subscribe(self._on_step))
        self._subscriptions.add(simulation.frames.subscribe(self._on_frame))
        self._subscriptions.add(simulation.finished.subscribe(self._on_finished))
        logger.debug(f'Recording run into {os.path.abspath(self._run_dir)}')

    def detach(self) -> None:
        self._subscriptions.dispose()
        self._subscriptions = CompositeDisposable()
        if self._metrics_file is not None:
            self._metrics_file.close()
            self._metrics_file = None
        if self._step_log_id is not None:
            remove_step_log(self._step_log_id)
            self._step_log_id = None

    def _on_step(self, report: StepReport) -> None:
        self._step_logger.info(report.format())

    def _on_frame(self, frame: Frame) -> None:
        path = frame_path(self._run_dir, frame.step)
        save_obj(frame.mesh, path)
        if frame.failing:
            self._step_logger.info(f'failing frame written: {os.path.basename(path)}')
            return
        assert self._metrics_file is not None
        self._writer.writerow(metrics_row(frame, self._config.record_wall_time))
        self._metrics_file.flush()

    def _on_finished(self, result: RunResult) -> None:
        line = f'stop: {result.stop_reason} after {result.steps} steps'
        if result.failure:
            line += f' ({result.failure})'
        self._step_logger.info(line)
        self._step_logger.info(f'digest: {result.digest}')
