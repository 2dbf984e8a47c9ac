from .helpers import (
    config_echo_path,
    frame_path,
    frames_dir,
    metrics_path,
    run_dir_name,
    step_log_path,
    summary_path,
)

__all__ = (
    'config_echo_path',
    'frames_dir',
    'frame_path',
    'metrics_path',
    'step_log_path',
    'summary_path',
    'run_dir_name',
)
