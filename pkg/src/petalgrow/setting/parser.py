"""
Flat `key = value` configuration files.

One entry per line, `#` starts a comment.  A value is decoded as a TOML
value when it is one (`2`, `0.5`, `true`, `"disk"`, `[0, 0, -1]`) and is
taken as a bare string otherwise (`all-boundary`, `INFO`).
"""
from __future__ import annotations

import os
from typing import Any, Dict, Iterable

import toml
from loguru import logger
from pydantic import ValidationError

from .exceptions import ConfigSyntaxError, ConfigTypeError, UnknownKeyError
from .models import KEYS, SimConfig

__all__ = (
    'parse_config',
    'parse_config_text',
    'parse_config_lines',
    'format_config',
    'dump_config',
)


def _decode_value(text: str) -> Any:
    try:
        return toml.loads(f'value = {text}')['value']
    except (toml.TomlDecodeError, IndexError, KeyError):
        return text


def parse_config_lines(lines: Iterable[str]) -> SimConfig:
    values: Dict[str, Any] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        key, sep, text = line.partition('=')
        key, text = key.strip(), text.strip()
        if not sep or not key:
            raise ConfigSyntaxError(lineno, f'expected `key = value`: {raw.rstrip()}')
        if not text:
            raise ConfigSyntaxError(lineno, f'missing value for {key!r}')
        if key not in KEYS:
            raise UnknownKeyError(key)
        if key in values:
            raise ConfigSyntaxError(lineno, f'duplicate key {key!r}')
        values[key] = _decode_value(text)

    try:
        return SimConfig.parse_obj(values)
    except ValidationError as exc:
        error = exc.errors()[0]
        loc = error['loc']
        key = str(loc[0]) if loc and loc[0] != '__root__' else _root_key(error['msg'])
        raise ConfigTypeError(key, error['msg']) from exc


def parse_config_text(text: str) -> SimConfig:
    return parse_config_lines(text.splitlines())


def parse_config(path: str) -> SimConfig:
    with open(path, 'rt', encoding='utf8') as file:
        config = parse_config_lines(file)
    logger.debug(f'Loaded config from {os.path.abspath(path)}')
    return config


def format_config(config: SimConfig) -> str:
    items = []
    for key in KEYS:
        value = getattr(config, key)
        if isinstance(value, tuple):
            value = list(value)
        items.append(toml.dumps({key: value}))
    return ''.join(items)


def dump_config(config: SimConfig, path: str) -> None:
    """Write every key, sorted, in the grammar `parse_config` reads."""
    with open(path, 'wt', encoding='utf8') as file:
        file.write(format_config(config))


def _strip_comment(line: str) -> str:
    # a `#` inside a quoted string is part of the value
    quote = ''
    for i, char in enumerate(line):
        if quote:
            if char == quote:
                quote = ''
        elif char in '"\'':
            quote = char
        elif char == '#':
            return line[:i]
    return line


def _root_key(message: str) -> str:
    for key in KEYS:
        if key in message:
            return key
    return '__root__'
