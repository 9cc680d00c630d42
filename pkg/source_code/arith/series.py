"""
Truncated Series Module

This module provides truncated formal Laurent series in one variable with an
explicit truncation order: coefficients at degrees >= order are unknown,
never zero.
"""

import logging
from typing import Dict, Iterable, List

from utils.errors import InsufficientOrder, NotInvertible, VariableMismatch
from .scalar import ONE, ZERO, Scalar, binom, format_scalar, inverse, sign_power

logger = logging.getLogger(__name__)


class TruncSeries:
    """
    A Laurent series sum_{d >= min_deg} c_d var^d known below `order`.
    """

    __slots__ = ("var", "min_deg", "coeffs", "order")

    def __init__(self, var: str, coeffs: Dict[int, Scalar], order: int, min_deg: int = 0):
        """
        Initialize a truncated series.

        Args:
            var: Variable tag
            coeffs: Map degree -> coefficient; zero entries and degrees at or
                beyond the order are dropped
            order: Truncation order O
            min_deg: Lower bound for every nonzero degree
        """
        cleaned = {}
        for degree, coeff in coeffs.items():
            if degree >= order or not coeff:
                continue
            if degree < min_deg:
                raise ValueError(f"Degree {degree} below min_deg {min_deg}")
            cleaned[degree] = coeff
        self.var = var
        self.min_deg = min(min_deg, order)
        self.coeffs = cleaned
        self.order = order

    @classmethod
    def polynomial(cls, var: str, coefficients: Iterable[Scalar], order: int) -> "TruncSeries":
        """
        Build a series from a coefficient list c_0, c_1, ... truncated at `order`.
        """
        return cls(var, dict(enumerate(coefficients)), order, 0)

    @classmethod
    def constant(cls, var: str, value: Scalar, order: int) -> "TruncSeries":
        """Build the constant series `value`."""
        return cls(var, {0: value}, order, 0)

    def coefficient(self, degree: int) -> Scalar:
        """
        Coefficient at a degree.

        Raises:
            InsufficientOrder: If the degree is at or beyond the order
        """
        if degree >= self.order:
            raise InsufficientOrder(degree + 1, self.order)
        return self.coeffs.get(degree, ZERO)

    def valuation(self) -> int:
        """Lowest degree that may carry a nonzero coefficient."""
        if self.coeffs:
            return min(self.coeffs)
        return self.order

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        return series_add(self, other)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return series_sub(self, other)

    def __neg__(self) -> "TruncSeries":
        return series_scale(self, -ONE)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        return series_mul(self, other)

    def truncate(self, order: int) -> "TruncSeries":
        """Lower the truncation order."""
        return TruncSeries(self.var, self.coeffs, min(order, self.order), self.min_deg)

    def equal_within(self, other: "TruncSeries") -> bool:
        """
        Compare two series on the degrees certified in both.
        """
        _check_var(self, other)
        top = min(self.order, other.order)
        low = min(self.min_deg, other.min_deg)
        return all(
            self.coeffs.get(d, ZERO) == other.coeffs.get(d, ZERO) for d in range(low, top)
        )

    def format_coefficients(self) -> List[str]:
        """Coefficients from min_deg up to order - 1 as Scalar text."""
        return [format_scalar(self.coeffs.get(d, ZERO)) for d in range(self.min_deg, self.order)]

    def __repr__(self) -> str:
        terms = [f"{format_scalar(c)}*{self.var}^{d}" for d, c in sorted(self.coeffs.items())]
        body = " + ".join(terms) if terms else "0"
        return f"TruncSeries({body} + O({self.var}^{self.order}))"


def _check_var(a: TruncSeries, b: TruncSeries) -> None:
    if a.var != b.var:
        raise VariableMismatch(a.var, b.var)


def series_add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Sum of two series, certified up to the smaller order."""
    _check_var(a, b)
    coeffs = dict(a.coeffs)
    for degree, coeff in b.coeffs.items():
        coeffs[degree] = coeffs.get(degree, ZERO) + coeff
    return TruncSeries(a.var, coeffs, min(a.order, b.order), min(a.min_deg, b.min_deg))


def series_sub(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Difference of two series."""
    return series_add(a, series_scale(b, -ONE))


def series_scale(a: TruncSeries, factor: Scalar) -> TruncSeries:
    """Multiply every coefficient by a scalar."""
    return TruncSeries(
        a.var, {d: c * factor for d, c in a.coeffs.items()}, a.order, a.min_deg
    )


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """
    Product of two series.

    The coefficient at degree d needs a up to d - val(b) and b up to
    d - val(a), so the product is certified below
    min(order_a + val_b, order_b + val_a).

    Args:
        a: Left factor
        b: Right factor

    Returns:
        TruncSeries: The product

    Raises:
        VariableMismatch: If the variables differ
    """
    _check_var(a, b)
    low_a = a.valuation()
    low_b = b.valuation()
    order = min(a.order + low_b, b.order + low_a)
    coeffs: Dict[int, Scalar] = {}
    for da, ca in a.coeffs.items():
        for db, cb in b.coeffs.items():
            degree = da + db
            if degree >= order:
                continue
            coeffs[degree] = coeffs.get(degree, ZERO) + ca * cb
    min_deg = min(low_a + low_b, order)
    return TruncSeries(a.var, coeffs, order, min_deg)


def series_inv(a: TruncSeries) -> TruncSeries:
    """
    Multiplicative inverse of a series with a known nonzero coefficient.

    For a = x^v (c + ...) known below O the inverse x^-v (1/c + ...) is
    known below O - 2v.

    Raises:
        NotInvertible: If no coefficient below the order is nonzero
    """
    shift = a.valuation()
    if shift >= a.order:
        raise NotInvertible(f"Series {a!r} has no nonzero coefficient below its order")
    length = a.order - shift
    base = [a.coeffs.get(shift + k, ZERO) for k in range(length)]
    lead_inverse = inverse(base[0])
    result = [lead_inverse]
    for n in range(1, length):
        total = ZERO
        for k in range(1, n + 1):
            if base[k]:
                total += base[k] * result[n - k]
        result.append(-lead_inverse * total)
    coeffs = {k - shift: c for k, c in enumerate(result)}
    return TruncSeries(a.var, coeffs, a.order - 2 * shift, -shift)


def series_negate_var(a: TruncSeries) -> TruncSeries:
    """Substitute var -> -var: the coefficient at degree d gets (-1)^d."""
    return TruncSeries(
        a.var, {d: c * sign_power(d) for d, c in a.coeffs.items()}, a.order, a.min_deg
    )


def series_divided_derivative(a: TruncSeries, k: int) -> TruncSeries:
    """
    The k-th derivative divided by k!: degree e gets binom(e + k, k) c_{e+k}.
    """
    if k == 0:
        return a
    coeffs = {}
    for degree, coeff in a.coeffs.items():
        factor = binom(degree, k)
        if factor:
            coeffs[degree - k] = coeff * factor
    min_deg = a.min_deg - k if a.min_deg < 0 else max(a.min_deg - k, 0)
    return TruncSeries(a.var, coeffs, a.order - k, min_deg)


def series_rename(a: TruncSeries, var: str) -> TruncSeries:
    """The same series in another variable."""
    return TruncSeries(var, a.coeffs, a.order, a.min_deg)


def series_one(var: str, order: int) -> TruncSeries:
    """The constant series 1."""
    return TruncSeries.constant(var, ONE, order)

