from .evaluate import (
    band_modulus_bound,
    band_product,
    constant_product,
    eval_reflectivity,
    is_constant,
    is_real_valued,
    reflectivity_array,
)
from .models import (
    BaseReflectivity,
    ConstantReflectivity,
    PerfectReflector,
    PressureRelease,
    ReflectivitySpec,
    TableReflectivity,
)
from .table import TABLE_COLUMNS, load_reflectivity_table, parse_reflectivity_table

__all__ = [
    "BaseReflectivity",
    "ConstantReflectivity",
    "PerfectReflector",
    "PressureRelease",
    "ReflectivitySpec",
    "TABLE_COLUMNS",
    "TableReflectivity",
    "band_modulus_bound",
    "band_product",
    "constant_product",
    "eval_reflectivity",
    "is_constant",
    "is_real_valued",
    "load_reflectivity_table",
    "parse_reflectivity_table",
    "reflectivity_array",
]
