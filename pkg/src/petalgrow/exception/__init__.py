from .exceptions import PetalgrowError

__all__ = ('PetalgrowError',)
