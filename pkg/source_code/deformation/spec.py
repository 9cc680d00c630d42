"""
Series Specification Module

This module provides the QSeriesSpec data model, the deformed data
(q_ij, p_ij(x), O), and the braiding series q_ij(x) = q_ij p_ij(-x) / p_ij(x).
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from arith import (
    ONE,
    Scalar,
    TruncSeries,
    format_scalar,
    parse_scalar,
    series_inv,
    series_mul,
    series_negate_var,
    series_scale,
)
from qalgebra import QSpec, validate_q
from utils.errors import SkewViolation

logger = logging.getLogger(__name__)

Polynomial = Tuple[Scalar, ...]
SERIES_VAR = "x"


def parse_polynomial(entry: Union[str, Sequence[str]]) -> Polynomial:
    """
    Parse a coefficient list such as ["1", "1"] (for 1 + x) or a single "1".

    Args:
        entry: Scalar text or a list of Scalar text, constant term first

    Returns:
        tuple: The coefficients with trailing zeros removed
    """
    if isinstance(entry, str):
        entry = [entry]
    coefficients = [parse_scalar(str(text)) if isinstance(text, (str, int)) else text for text in entry]
    while len(coefficients) > 1 and not coefficients[-1]:
        coefficients.pop()
    return tuple(coefficients)


def format_polynomial(poly: Polynomial) -> List[str]:
    """Coefficient list in Scalar text format."""
    return [format_scalar(c) for c in poly]


@dataclass(frozen=True)
class QSeriesSpec:
    """
    The data (l, Q, P, O) of the diagonal deformed family. Entries of P are
    exact polynomials; O is the order to which braiding series are certified.
    """

    l: int
    q: Tuple[Tuple[Scalar, ...], ...]
    p: Tuple[Tuple[Polynomial, ...], ...]
    order: int = 8

    @classmethod
    def from_strings(
        cls,
        q_rows: Sequence[Sequence[str]],
        p_rows: Sequence[Sequence[Union[str, Sequence[str]]]] = None,
        order: int = 8,
    ) -> "QSeriesSpec":
        """
        Build a spec from Scalar text.

        Args:
            q_rows: Square matrix of Scalar text
            p_rows: Square matrix of coefficient lists; defaults to all "1"
            order: Truncation order O

        Returns:
            QSeriesSpec: The spec (not yet validated)
        """
        constant = QSpec.from_rows(q_rows)
        size = constant.l
        if p_rows is None:
            p_rows = [["1"] * size for _ in range(size)]
        p = tuple(tuple(parse_polynomial(entry) for entry in row) for row in p_rows)
        return cls(size, constant.q, p, order)

    @classmethod
    def constant(cls, spec: QSpec, order: int = 8) -> "QSeriesSpec":
        """The undeformed family p_ij = 1."""
        p = tuple(tuple((ONE,) for _ in range(spec.l)) for _ in range(spec.l))
        return cls(spec.l, spec.q, p, order)

    def constant_spec(self) -> QSpec:
        """The constant data Q = Q(0)."""
        return QSpec(self.l, self.q)

    def polynomial(self, i: int, j: int) -> Polynomial:
        """p_ij for 1-based colors."""
        return self.p[i - 1][j - 1]

    def p_series(self, i: int, j: int, order: int) -> TruncSeries:
        """p_ij as a series known below `order`."""
        return TruncSeries.polynomial(SERIES_VAR, self.polynomial(i, j), order)

    def p_inverse_series(self, i: int, j: int, order: int) -> TruncSeries:
        """p_ij^-1 known below `order`."""
        return series_inv(self.p_series(i, j, order))

    def validate(self) -> Tuple[bool, str]:
        """
        Validate skewness of Q, p_ij(0) = 1, p_ij = p_ji and the shape of P.

        Returns:
            tuple: (is_valid, error_message)
        """
        try:
            validate_q(self.constant_spec())
        except SkewViolation as e:
            return False, str(e)
        if len(self.p) != self.l or any(len(row) != self.l for row in self.p):
            return False, f"p must be a {self.l}x{self.l} matrix"
        if self.order < 1:
            return False, f"order must be positive, got {self.order}"
        for i in range(1, self.l + 1):
            for j in range(1, self.l + 1):
                poly = self.polynomial(i, j)
                if not poly or poly[0] != ONE:
                    return False, f"p[{i},{j}](0) must be 1"
                if poly != self.polynomial(j, i):
                    return False, f"p[{i},{j}] != p[{j},{i}]"
        return True, ""

    def to_dict(self):
        """Plain data in the configuration format."""
        return {
            "l": self.l,
            "q": self.constant_spec().to_strings(),
            "p": [[format_polynomial(poly) for poly in row] for row in self.p],
            "order": self.order,
        }


def build_qx(spec: QSeriesSpec, order: int = None) -> List[List[TruncSeries]]:
    """
    The matrix q_ij(x) = q_ij p_ij(-x) / p_ij(x).

    Args:
        spec: The deformed data
        order: Truncation order, defaults to spec.order

    Returns:
        list: l x l matrix of series (0-based indices)
    """
    order = spec.order if order is None else order
    matrix = []
    for i in range(1, spec.l + 1):
        row = []
        for j in range(1, spec.l + 1):
            p = spec.p_series(i, j, order)
            ratio = series_mul(series_negate_var(p), series_inv(p)).truncate(order)
            row.append(series_scale(ratio, spec.q[i - 1][j - 1]))
        matrix.append(row)
    logger.debug(f"Built q(x) for l={spec.l} at order {order}")
    return matrix
