"""
Q-Matrix Specification Module

This module provides the QSpec data model: the rank l and the constant
matrix Q = (q_ij) defining the algebra.
"""

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

from arith import ONE, Scalar, format_scalar, parse_scalar
from utils.errors import SkewViolation

logger = logging.getLogger(__name__)

ScalarMatrix = Tuple[Tuple[Scalar, ...], ...]


@dataclass(frozen=True)
class QSpec:
    """
    The constant data (l, Q). Colors are numbered 1..l.
    """

    l: int
    q: ScalarMatrix

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Union[Scalar, str]]]) -> "QSpec":
        """
        Build a spec from a square matrix of scalars or Scalar text.

        Args:
            rows: Row-major entries q_ij

        Returns:
            QSpec: The spec (not yet validated)
        """
        matrix = tuple(
            tuple(parse_scalar(entry) if isinstance(entry, str) else entry for entry in row)
            for row in rows
        )
        return cls(len(matrix), matrix)

    @classmethod
    def diagonal(cls, signs: Sequence[int]) -> "QSpec":
        """Spec with q_ii = signs[i] and q_ij = 1 off the diagonal."""
        size = len(signs)
        rows = [
            [parse_scalar(str(signs[i])) if i == j else ONE for j in range(size)]
            for i in range(size)
        ]
        return cls.from_rows(rows)

    def entry(self, i: int, j: int) -> Scalar:
        """q_ij for 1-based colors."""
        return self.q[i - 1][j - 1]

    def is_fermionic(self, color: int) -> bool:
        """True when q_ii = -1."""
        return self.entry(color, color) == -ONE

    def colors(self) -> range:
        """The colors 1..l."""
        return range(1, self.l + 1)

    def single_color(self, color: int) -> "QSpec":
        """The rank-one spec (q_ii) of one color."""
        return QSpec(1, ((self.entry(color, color),),))

    def leading_colors(self, count: int) -> "QSpec":
        """The spec of the first `count` colors."""
        return QSpec(count, tuple(row[:count] for row in self.q[:count]))

    def validate(self) -> Tuple[bool, str]:
        """
        Validate the spec.

        Returns:
            tuple: (is_valid, error_message)
        """
        try:
            validate_q(self)
        except SkewViolation as e:
            return False, str(e)
        return True, ""

    def to_strings(self):
        """The matrix in Scalar text format."""
        return [[format_scalar(entry) for entry in row] for row in self.q]


def validate_q(spec: QSpec) -> None:
    """
    Check the skew condition q_ij * q_ji = 1 for all colors.

    Diagonal entries are checked first so that q_ii outside {1, -1} gets
    its own message.

    Args:
        spec: Spec to validate

    Raises:
        SkewViolation: With the first offending pair and product
    """
    if spec.l < 1 or len(spec.q) != spec.l or any(len(row) != spec.l for row in spec.q):
        raise SkewViolation(0, 0, f"matrix shape {[len(row) for row in spec.q]} for l={spec.l}")
    for i in spec.colors():
        diagonal = spec.entry(i, i)
        if diagonal != ONE and diagonal != -ONE:
            raise SkewViolation(i, i, format_scalar(diagonal * diagonal))
    for i in spec.colors():
        for j in spec.colors():
            product = spec.entry(i, j) * spec.entry(j, i)
            if product != ONE:
                raise SkewViolation(i, j, format_scalar(product))
