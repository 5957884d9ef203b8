from .numbers import format_complex, format_float, parse_complex, parse_float

__all__ = ["format_complex", "format_float", "parse_complex", "parse_float"]
