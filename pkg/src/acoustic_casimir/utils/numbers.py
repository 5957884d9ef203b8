from __future__ import annotations

import math
import re
from functools import lru_cache

_WS_RE = re.compile(r"\s+")


@lru_cache(maxsize=1024)
def parse_complex(text: str) -> complex:
    """Parse ``0.8``, ``-1``, ``0.5+0.1j`` or ``0.5 + 0.1j`` into a complex number."""
    cleaned = _WS_RE.sub("", text).replace("i", "j")
    if not cleaned:
        raise ValueError("empty number")
    value = complex(cleaned)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValueError(f"non-finite number {text!r}")
    return value


def parse_float(text: str) -> float:
    value = float(text.strip())
    if not math.isfinite(value):
        raise ValueError(f"non-finite number {text!r}")
    return value


def format_float(value: float) -> str:
    """Shortest round-trip representation."""
    return repr(float(value))


def format_complex(value: complex) -> str:
    value = complex(value)
    if value.imag == 0.0:
        return format_float(value.real)
    sign = "-" if math.copysign(1.0, value.imag) < 0 else "+"
    return f"{format_float(value.real)}{sign}{format_float(abs(value.imag))}j"
