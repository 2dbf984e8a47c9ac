from ..exception import PetalgrowError


class InvalidSpecError(PetalgrowError, ValueError):
    ...
