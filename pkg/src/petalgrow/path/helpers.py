import os

__all__ = (
    'config_echo_path',
    'frames_dir',
    'frame_path',
    'metrics_path',
    'step_log_path',
    'summary_path',
    'run_dir_name',
)


def config_echo_path(run_dir: str) -> str:
    return os.path.join(run_dir, 'config.echo')


def frames_dir(run_dir: str) -> str:
    return os.path.join(run_dir, 'frames')


def frame_path(run_dir: str, step: int) -> str:
    return os.path.join(frames_dir(run_dir), 'frame_%06d.obj' % step)


def metrics_path(run_dir: str) -> str:
    return os.path.join(run_dir, 'metrics.csv')


def step_log_path(run_dir: str) -> str:
    return os.path.join(run_dir, 'log.txt')


def summary_path(out_dir: str) -> str:
    return os.path.join(out_dir, 'summary.csv')


def run_dir_name(kind: str, seed: int) -> str:
    return f'{kind}_seed{seed:03d}'
