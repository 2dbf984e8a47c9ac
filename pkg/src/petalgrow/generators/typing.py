from typing import Literal

GeneratorKind = Literal['disk', 'annulus', 'moebius-like', 'punctured-torus']
