from ..exception import PetalgrowError

__all__ = 'ConfigError', 'ConfigSyntaxError', 'UnknownKeyError', 'ConfigTypeError'


class ConfigError(PetalgrowError, ValueError):
    ...


class ConfigSyntaxError(ConfigError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f'line {lineno}: {message}')
        self.lineno = lineno


class UnknownKeyError(ConfigError):
    def __init__(self, name: str) -> None:
        super().__init__(f'unknown config key: {name!r}')
        self.name = name


class ConfigTypeError(ConfigError, TypeError):
    def __init__(self, key: str, message: str) -> None:
        super().__init__(f'invalid value for {key!r}: {message}')
        self.key = key
