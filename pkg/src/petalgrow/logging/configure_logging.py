import os
import sys
from datetime import datetime
from typing import Any, Dict, Optional

from loguru import logger
from tqdm import tqdm

from .typing import LOG_LEVEL

__all__ = (
    'configure_logger',
    'add_step_log',
    'remove_step_log',
    'step_logger',
    'TqdmOutputStream',
)

LOGURU_CONSOLE_FORMAT = (
    '<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | '
    '<level>{level}</level> | '
    '<cyan>{module}</cyan>:<cyan>{line}</cyan> | '
    '<level>{extra[run]}</level> - '
    '<level>{message}</level>'
)

LOGURU_FILE_FORMAT = (
    '<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | '
    '<level>{level}</level> | '
    '<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | '
    '<level>{extra[run]}</level> - '
    '<level>{message}</level>'
)

STEP_LOG_FORMAT = '{message}'


class TqdmOutputStream:
    def write(self, string: str = '') -> None:
        tqdm.write(string, file=sys.stderr, end='')

    def isatty(self) -> bool:
        return sys.stderr.isatty()


_console_handler_id: Optional[int] = None
_file_handler_id: Optional[int] = None

_old_log_dir: Optional[str] = None
_old_console_log_level: Optional[LOG_LEVEL] = None


def configure_logger(
    log_dir: Optional[str] = None, *, console_log_level: LOG_LEVEL = 'INFO'
) -> None:
    global _console_handler_id, _file_handler_id
    global _old_log_dir, _old_console_log_level

    logger.configure(extra={'run': ''})

    if console_log_level != _old_console_log_level:
        if _console_handler_id is not None:
            logger.remove(_console_handler_id)
        else:
            logger.remove()  # remove the default stderr handler

        if bool(os.environ.get('PETALGROW_PROGRESS')):
            _console_handler_id = logger.add(
                TqdmOutputStream(),
                level=console_log_level,
                format=LOGURU_CONSOLE_FORMAT,
                filter=_not_step_report,
            )
        else:
            _console_handler_id = logger.add(
                sys.stderr,
                level=console_log_level,
                format=LOGURU_CONSOLE_FORMAT,
                filter=_not_step_report,
            )

        _old_console_log_level = console_log_level

    if log_dir is not None and log_dir != _old_log_dir:
        os.makedirs(log_dir, exist_ok=True)
        log_file_path = make_log_file_path(log_dir)
        logger.info(f'log file: {log_file_path}')

        file_handler_id = logger.add(
            log_file_path,
            level='TRACE' if bool(os.environ.get('PETALGROW_TRACE')) else 'DEBUG',
            format=LOGURU_FILE_FORMAT,
            enqueue=True,
            rotation='00:00',
            backtrace=True,
            diagnose=True,
            filter=_not_step_report,
        )

        if _file_handler_id is not None:
            logger.remove(_file_handler_id)

        _file_handler_id = file_handler_id
        _old_log_dir = log_dir


def make_log_file_path(log_dir: str) -> str:
    data_time_string = datetime.now().strftime("%Y-%m-%d_%H-%M-%S_%f")
    filename = f'petalgrow_{data_time_string}.log'
    return os.path.abspath(os.path.join(log_dir, filename))


def add_step_log(path: str) -> int:
    """Add a handler that writes only step report records to `path`."""
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    return logger.add(
        path,
        level='INFO',
        format=STEP_LOG_FORMAT,
        filter=_is_step_report,
        mode='w',
        encoding='utf8',
    )


def remove_step_log(handler_id: int) -> None:
    logger.remove(handler_id)


def step_logger(**extra: Any):  # type: ignore
    return logger.bind(step_report=True, **extra)


def _is_step_report(record: Dict[str, Any]) -> bool:
    return bool(record['extra'].get('step_report'))


def _not_step_report(record: Dict[str, Any]) -> bool:
    return not record['extra'].get('step_report')
