from .exceptions import InvalidSpecError
from .generate import generate_initial, torus
from .models import KINDS, GeneratorSpec
from .surfaces import (
    annulus_surface,
    disk_surface,
    moebius_surface,
    punctured_torus_surface,
    torus_surface,
)
from .typing import GeneratorKind

__all__ = (
    'KINDS',
    'GeneratorKind',
    'GeneratorSpec',

    'disk_surface',
    'annulus_surface',
    'moebius_surface',
    'torus_surface',
    'punctured_torus_surface',

    'generate_initial',
    'torus',

    'InvalidSpecError',
)
