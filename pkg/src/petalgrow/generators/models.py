from __future__ import annotations

import attr

from .exceptions import InvalidSpecError
from .typing import GeneratorKind

__all__ = 'KINDS', 'GeneratorSpec'

KINDS = ('disk', 'annulus', 'moebius-like', 'punctured-torus')


@attr.s(auto_attribs=True, slots=True, frozen=True)
class GeneratorSpec:
    """
    Initial surface description.

    `radial` counts rings of a disk or annulus and rows across the strip;
    `angular` counts boundary vertices of a disk and segments around the
    strip or the torus.  The sizes only fix the shape: the surface is scaled
    to a mean edge length of `edge_length`, so that collision radii and
    force constants keep their meaning.  `perturbation` is relative to the
    mean edge length.
    """

    kind: GeneratorKind = 'disk'
    radial: int = 8
    angular: int = 48
    radius: float = 1.0
    inner_radius: float = 0.5
    width: float = 0.5
    tube_radius: float = 0.25
    perturbation: float = 0.02
    seed: int = 0
    edge_length: float = 1.0

    def __attrs_post_init__(self) -> None:
        if self.kind not in KINDS:
            raise InvalidSpecError(f'unknown surface kind: {self.kind}')
        if self.radial < 2 and self.kind == 'moebius-like':
            raise InvalidSpecError(f'strip needs at least two rows: {self.radial}')
        if self.radial < 1:
            raise InvalidSpecError(f'radial resolution must be >= 1: {self.radial}')
        if self.angular < 3:
            raise InvalidSpecError(f'angular resolution must be >= 3: {self.angular}')
        if not (self.radius > 0 and self.width > 0 and self.tube_radius > 0):
            raise InvalidSpecError('sizes must be positive')
        if self.kind == 'annulus' and not 0 < self.inner_radius < self.radius:
            raise InvalidSpecError(
                f'annulus needs 0 < inner radius < radius: {self.inner_radius}'
            )
        if self.kind == 'punctured-torus' and not self.tube_radius < self.radius:
            raise InvalidSpecError('tube radius must be below the torus radius')
        if not self.edge_length > 0:
            raise InvalidSpecError(f'edge length must be positive: {self.edge_length}')
        if self.perturbation < 0:
            raise InvalidSpecError(f'perturbation must not be negative: {self.perturbation}')
