from ..exception import PetalgrowError


class GrowthError(PetalgrowError):
    ...


class InvalidParamsError(GrowthError, ValueError):
    ...


class EmptyBoundaryError(GrowthError, ValueError):
    ...


class DisconnectedComponentWithoutSourceError(GrowthError):
    ...
