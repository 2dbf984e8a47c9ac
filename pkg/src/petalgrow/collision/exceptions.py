from ..exception import PetalgrowError


class CollisionError(PetalgrowError):
    ...


class InvalidColliderError(CollisionError, ValueError):
    ...
