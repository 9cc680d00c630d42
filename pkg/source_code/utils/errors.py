"""
Errors Module

This module defines the exception hierarchy shared by every package.
"""

from typing import Sequence


class QvaError(Exception):
    """Base class for all engine errors."""


class ParseError(QvaError):
    """Raised when scalar, word or state text cannot be parsed."""


class ConfigError(QvaError):
    """Raised when a configuration cannot be turned into a valid spec."""


class VariableMismatch(QvaError):
    """Raised when two series in different variables are combined."""

    def __init__(self, left: str, right: str):
        super().__init__(f"Variable mismatch: {left} vs {right}")
        self.left = left
        self.right = right


class NotInvertible(QvaError):
    """Raised when a scalar or series has no inverse."""


class InvalidParameter(QvaError):
    """Raised for out-of-range arguments."""


class SkewViolation(QvaError):
    """Raised when q_ij * q_ji != 1 for some pair of colors."""

    def __init__(self, i: int, j: int, product):
        super().__init__(f"q[{i},{j}] * q[{j},{i}] = {product}, expected 1")
        self.i = i
        self.j = j
        self.product = product


class InsufficientOrder(QvaError):
    """Raised when the truncation order cannot certify a requested coefficient."""

    def __init__(self, required: int, available: int):
        super().__init__(
            f"Truncation order {available} is insufficient, need at least {required}"
        )
        self.required = required
        self.available = available


class InconsistentCentralCharge(QvaError):
    """Raised when the Virasoro anomalies do not share one central charge."""

    def __init__(self, values: Sequence[str]):
        super().__init__(f"Central charge anomalies disagree: {', '.join(values)}")
        self.values = list(values)
