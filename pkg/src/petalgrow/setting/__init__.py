from .exceptions import (
    ConfigError,
    ConfigSyntaxError,
    ConfigTypeError,
    UnknownKeyError,
)
from .models import KEYS, EnvSettings, SimConfig
from .parser import (
    dump_config,
    format_config,
    parse_config,
    parse_config_lines,
    parse_config_text,
)
from .typing import Method, ScheduleKind

__all__ = (
    'KEYS',
    'EnvSettings',
    'SimConfig',
    'Method',
    'ScheduleKind',

    'parse_config',
    'parse_config_text',
    'parse_config_lines',
    'format_config',
    'dump_config',

    'ConfigError',
    'ConfigSyntaxError',
    'UnknownKeyError',
    'ConfigTypeError',
)
