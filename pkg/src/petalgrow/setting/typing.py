from typing import Literal

Method = Literal['shell', 'collision']
ScheduleKind = Literal['ramp', 'constant']
