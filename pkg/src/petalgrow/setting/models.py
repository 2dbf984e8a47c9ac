from __future__ import annotations

from typing import List, Optional, Tuple

from pydantic import BaseModel as PydanticBaseModel
from pydantic import BaseSettings, Field, NonNegativeInt, root_validator, validator
from typing_extensions import Annotated

from ..collision.typing import PairMode
from ..growth import GrowthParams, SourcePolicy
from ..growth.typing import GeodesicSolver, SourcePolicyKind
from ..logging.typing import LOG_LEVEL
from ..remesh.typing import InteriorSplit, SplitLengthMode
from ..shell import ExternalForceSpec, RestState
from ..shell.typing import Weighting
from .typing import Method, ScheduleKind

__all__ = 'EnvSettings', 'SimConfig', 'KEYS'


Vector = Tuple[float, float, float]


class EnvSettings(BaseSettings):
    seed: Annotated[
        Optional[int], Field(env=['PETALGROW_SEED', 'CABBAGE_SEED'], ge=0)
    ] = None


class BaseModel(PydanticBaseModel):
    class Config:
        validate_assignment = True
        anystr_strip_whitespace = True
        extra = 'forbid'


class SimConfig(BaseModel):
    method: Method = 'shell'

    # growth field
    growth_cutoff: Annotated[float, Field(gt=0, lt=1)] = 0.5
    growth_steepness: Annotated[float, Field(ge=0, lt=1)] = 0.5
    growth_high_at_sources: bool = True
    geodesic_solver: GeodesicSolver = 'graph'
    source_policy: SourcePolicyKind = 'all-boundary'
    source_vertices: List[NonNegativeInt] = []
    source_count: Annotated[int, Field(ge=1)] = 4

    # remeshing
    split_factor: Annotated[float, Field(gt=0)] = 1.0
    split_length_mode: SplitLengthMode = 'rest'
    interior_split: InteriorSplit = 'loop'
    collapse_factor: Annotated[float, Field(ge=0, lt=1)] = 0.2

    # shell
    stretch_stiffness: Annotated[float, Field(gt=0)] = 2.0
    bending_schedule: ScheduleKind = 'ramp'
    bending_kmin: Annotated[float, Field(ge=0)] = 0.005
    bending_kmax: Annotated[float, Field(ge=0)] = 0.03
    bending_ramp_steps: Annotated[int, Field(ge=0)] = 50

    # fairing
    smoothing_alpha: Annotated[float, Field(ge=0, le=1)] = 0.75
    smoothing_beta: Annotated[float, Field(ge=0, le=1)] = 0.1
    smoothing_tolerance: Annotated[float, Field(ge=0)] = 1e-8  # times L0 ** 2

    # collision
    collision_enabled: bool = True
    collision_normal_factor: Annotated[float, Field(gt=0)] = 0.25
    collision_tangent_factor: Annotated[float, Field(gt=0)] = 0.9
    collision_stiffness: Annotated[float, Field(ge=0)] = 0.5
    collision_blend: Annotated[float, Field(ge=0, le=1)] = 0.5
    collision_pair_mode: PairMode = 'symmetric'
    growth_collision_stiffness: Annotated[float, Field(ge=0)] = 2.0
    growth_collision_threshold: Annotated[float, Field(ge=0, le=1)] = 0.1

    # external forces
    gravity: Vector = (0.0, 0.0, 0.0)
    gravity_weighting: Weighting = 'one-minus-growth'
    rotation_axis: Vector = (0.0, 0.0, 1.0)
    rotation_center: Vector = (0.0, 0.0, 0.0)
    rotation_strength: Annotated[float, Field(ge=0)] = 0.0
    rotation_weighting: Weighting = 'growth'

    # run control
    dt: Annotated[float, Field(gt=0)] = 0.01
    max_steps: Annotated[int, Field(ge=0)] = 1000
    max_vertices: Annotated[int, Field(ge=3)] = 3000
    export_every: Annotated[int, Field(ge=0)] = 10  # 0 exports first and last only
    seed: Annotated[int, Field(ge=0)] = 0
    validate_every_step: bool = True
    record_wall_time: bool = False
    console_log_level: LOG_LEVEL = 'INFO'

    @validator('gravity', 'rotation_axis', 'rotation_center')
    def _validate_finite(cls, value: Vector) -> Vector:
        if not all(abs(x) < float('inf') for x in value):
            raise ValueError(f'vector components must be finite: {value}')
        return value

    @root_validator(skip_on_failure=True)
    def _validate_bending_range(cls, values):  # type: ignore
        kmin, kmax = values.get('bending_kmin'), values.get('bending_kmax')
        if kmin is not None and kmax is not None and kmin > kmax:
            raise ValueError(f'bending_kmin {kmin} exceeds bending_kmax {kmax}')
        return values

    @root_validator(skip_on_failure=True)
    def _validate_rotation(cls, values):  # type: ignore
        axis = values.get('rotation_axis')
        if values.get('rotation_strength', 0.0) > 0.0 and not any(axis or ()):
            raise ValueError('rotation_strength > 0 needs a non-zero rotation_axis')
        return values

    def growth_params(self) -> GrowthParams:
        return GrowthParams(
            cutoff=self.growth_cutoff,
            steepness=self.growth_steepness,
            high_at_sources=self.growth_high_at_sources,
        )

    def sources(self) -> SourcePolicy:
        return SourcePolicy(
            kind=self.source_policy,
            vertices=tuple(self.source_vertices),
            count=self.source_count,
            seed=self.seed,
        )

    def rest_state(self, rest_length: float, bending_stiffness: float) -> RestState:
        return RestState(
            rest_length=rest_length,
            stretch_stiffness=self.stretch_stiffness,
            bending_stiffness=bending_stiffness,
        )

    def external_force_spec(self) -> ExternalForceSpec:
        return ExternalForceSpec(
            gravity=self.gravity,
            rotation_axis=self.rotation_axis,
            rotation_center=self.rotation_center,
            rotation_strength=self.rotation_strength,
            gravity_weighting=self.gravity_weighting,
            rotation_weighting=self.rotation_weighting,
        )


KEYS = tuple(sorted(SimConfig.__fields__))
