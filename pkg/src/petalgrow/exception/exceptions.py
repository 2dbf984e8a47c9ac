class PetalgrowError(Exception):
    ...
