"""
Half-Integer Module

This module provides the HalfInt type used for L(0)-weights.
"""

from dataclasses import dataclass
from typing import Union

from utils.errors import ParseError


@dataclass(frozen=True, order=True)
class HalfInt:
    """
    An element n/2 of the half-integers, stored as n.
    """

    twice_value: int

    @classmethod
    def of(cls, value: Union[int, str, "HalfInt"]) -> "HalfInt":
        """
        Build a half-integer from an int, a "n/2" string or another HalfInt.

        Args:
            value: Integer, text such as "3/2" or "2", or a HalfInt

        Returns:
            HalfInt: The parsed value
        """
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return cls(2 * value)
        text = str(value).strip()
        try:
            if '/' in text:
                numerator, denominator = text.split('/')
                if int(denominator) == 2:
                    return cls(int(numerator))
                if int(denominator) == 1:
                    return cls(2 * int(numerator))
                raise ParseError(f"Not a half-integer: '{value}'")
            return cls(2 * int(text))
        except ValueError as e:
            raise ParseError(f"Not a half-integer: '{value}'") from e

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice_value + other.twice_value)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice_value - other.twice_value)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice_value)

    def is_integer(self) -> bool:
        """Check whether the value is an integer."""
        return self.twice_value % 2 == 0

    def floor(self) -> int:
        """Largest integer not above the value."""
        return self.twice_value // 2

    def __str__(self) -> str:
        if self.is_integer():
            return str(self.twice_value // 2)
        return f"{self.twice_value}/2"


HALF = HalfInt(1)
