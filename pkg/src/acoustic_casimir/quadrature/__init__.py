from .adaptive import IntegrationReport, adaptive_integrate
from .kronrod import NODES_PER_AXIS
from .moments import TAYLOR_THRESHOLD, MomentKind, m1s, m2c, trig_moments

__all__ = [
    "IntegrationReport",
    "MomentKind",
    "NODES_PER_AXIS",
    "TAYLOR_THRESHOLD",
    "adaptive_integrate",
    "m1s",
    "m2c",
    "trig_moments",
]
