from ..exception import PetalgrowError


class ShellError(PetalgrowError):
    ...


class NonFiniteForceError(ShellError, ArithmeticError):
    ...


class InvalidForceSpecError(ShellError, ValueError):
    ...
