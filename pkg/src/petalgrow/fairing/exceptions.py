from ..exception import PetalgrowError


class FairingError(PetalgrowError):
    ...


class MalformedBoundaryError(FairingError, ValueError):
    ...
