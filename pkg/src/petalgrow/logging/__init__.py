from .configure_logging import (
    TqdmOutputStream,
    add_step_log,
    configure_logger,
    remove_step_log,
    step_logger,
)

__all__ = (
    'configure_logger',
    'add_step_log',
    'remove_step_log',
    'step_logger',
    'TqdmOutputStream',
)
