from .casimir_error import (
    CasimirError,
    ConfigError,
    MethodNotApplicable,
    NonFiniteIntegrand,
    NotPassive,
    NotStrictlyPassive,
    OutOfTableRange,
    PassivityViolation,
    ResonancePole,
    SeriesNotApplicable,
    TableFormatError,
)
from .categorize import ErrorCategory, categorize_error
from .exit_status import ExitKind, ExitStatus, get_exit_status

__all__ = [
    "CasimirError",
    "ConfigError",
    "ErrorCategory",
    "ExitKind",
    "ExitStatus",
    "MethodNotApplicable",
    "NonFiniteIntegrand",
    "NotPassive",
    "NotStrictlyPassive",
    "OutOfTableRange",
    "PassivityViolation",
    "ResonancePole",
    "SeriesNotApplicable",
    "TableFormatError",
    "categorize_error",
    "get_exit_status",
]
