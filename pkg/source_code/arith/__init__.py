"""
Arithmetic Module

This module contains the exact numeric substrate: Gaussian-rational scalars,
half-integers, truncated series, coefficient windows and exact ranks.
"""

from .scalar import (
    Scalar,
    ZERO,
    ONE,
    IMAG_UNIT,
    scalar,
    parse_scalar,
    format_scalar,
    is_real,
    inverse,
    power,
    binom,
    sign_power,
)
from .halfint import HalfInt, HALF
from .series import (
    TruncSeries,
    series_add,
    series_sub,
    series_scale,
    series_mul,
    series_inv,
    series_negate_var,
    series_divided_derivative,
    series_rename,
    series_one,
)
from .window import (
    CoeffWindow,
    WindowComparison,
    EXPAND_IN_FIRST,
    EXPAND_IN_SECOND,
    expand_two_var,
    embed_series,
    product_box,
)
from .linalg import exact_rank, in_span, independent_rows

__all__ = [
    'Scalar',
    'ZERO',
    'ONE',
    'IMAG_UNIT',
    'scalar',
    'parse_scalar',
    'format_scalar',
    'is_real',
    'inverse',
    'power',
    'binom',
    'sign_power',
    'HalfInt',
    'HALF',
    'TruncSeries',
    'series_add',
    'series_sub',
    'series_scale',
    'series_mul',
    'series_inv',
    'series_negate_var',
    'series_divided_derivative',
    'series_rename',
    'series_one',
    'CoeffWindow',
    'WindowComparison',
    'EXPAND_IN_FIRST',
    'EXPAND_IN_SECOND',
    'expand_two_var',
    'embed_series',
    'product_box',
    'exact_rank',
    'in_span',
    'independent_rows',
]
