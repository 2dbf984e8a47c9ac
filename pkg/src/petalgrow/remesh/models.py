from __future__ import annotations

import attr
import numpy as np

from ..growth import GrowthField

__all__ = 'PassResult', 'SubdivisionOutcome'


@attr.s(auto_attribs=True, slots=True, frozen=True)
class PassResult:
    applied: int = 0
    refused: int = 0

    def __int__(self) -> int:
        return self.applied


@attr.s(auto_attribs=True, slots=True, frozen=True, eq=False)
class SubdivisionOutcome:
    applied: int
    new_vertices: np.ndarray
    field: GrowthField  # extended with the growth factors of new vertices

    def __int__(self) -> int:
        return self.applied
