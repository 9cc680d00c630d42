"""
Scalar Module

This module provides exact Gaussian-rational scalars, the coefficient field
of every computation, together with their text format.
"""

import re
import math
import logging
from functools import lru_cache
from typing import Tuple, Union

from sympy.polys.domains import QQ, QQ_I

from utils.errors import NotInvertible, ParseError

logger = logging.getLogger(__name__)

Scalar = type(QQ_I.one)

ZERO = QQ_I.zero
ONE = QQ_I.one
IMAG_UNIT = QQ_I(0, 1)

_COEFF_PATTERN = re.compile(r'^[+-]?\d+(?:/\d+)?$')
_TERM_PATTERN = re.compile(r'[+-]?[^+-]+')

RationalLike = Union[int, str, Tuple[int, int]]


def _rational(value):
    """
    Convert an int, a "p/q" string or a (p, q) pair to a rational.

    Args:
        value: Value to convert

    Returns:
        A rational element of QQ
    """
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, tuple):
        numerator, denominator = value
        if denominator == 0:
            raise ParseError(f"Zero denominator in {value}")
        return QQ(numerator, denominator)
    if isinstance(value, str):
        if not _COEFF_PATTERN.match(value):
            raise ParseError(f"Not a rational number: '{value}'")
        if '/' in value:
            numerator, denominator = value.split('/')
            if int(denominator) == 0:
                raise ParseError(f"Zero denominator in '{value}'")
            return QQ(int(numerator), int(denominator))
        return QQ(int(value))
    return QQ.convert(value)


def scalar(real: RationalLike = 0, imag: RationalLike = 0) -> Scalar:
    """
    Build the Gaussian rational real + imag*i.

    Args:
        real: Real part (int, "p/q" string or (p, q) pair)
        imag: Imaginary part (same forms)

    Returns:
        Scalar: The exact scalar
    """
    return QQ_I(_rational(real), _rational(imag))


def parse_scalar(text: str) -> Scalar:
    """
    Parse the Scalar text format: "a/b", "a/b+c/di", "i", "-1/2i", ...

    Args:
        text: Text to parse

    Returns:
        Scalar: The parsed scalar

    Raises:
        ParseError: If the text is not in the Scalar format
    """
    if not isinstance(text, str):
        raise ParseError(f"Scalar must be given as a string, got {text!r}")
    compact = text.replace(' ', '')
    if not compact:
        raise ParseError("Empty scalar")

    terms = _TERM_PATTERN.findall(compact)
    if ''.join(terms) != compact:
        raise ParseError(f"Malformed scalar: '{text}'")

    real = QQ(0)
    imag = QQ(0)
    for term in terms:
        if term.endswith('i'):
            coeff = term[:-1]
            if coeff in ('', '+'):
                coeff = '1'
            elif coeff == '-':
                coeff = '-1'
            imag += _rational(coeff)
        else:
            real += _rational(term)
    return QQ_I(real, imag)


def _format_rational(value) -> str:
    numerator = int(value.numerator)
    denominator = int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def format_scalar(value: Scalar) -> str:
    """
    Format a scalar in the canonical Scalar text format.

    Args:
        value: Scalar to format

    Returns:
        str: Canonical text, e.g. "1/2", "-i", "1/2+1/2i"
    """
    real, imag = value.x, value.y
    if not imag:
        return _format_rational(real)

    magnitude = _format_rational(abs(imag))
    if magnitude == '1':
        magnitude = ''
    if not real:
        sign = '-' if imag < 0 else ''
        return f"{sign}{magnitude}i"
    sign = '-' if imag < 0 else '+'
    return f"{_format_rational(real)}{sign}{magnitude}i"


def is_real(value: Scalar) -> bool:
    """Check whether a scalar has zero imaginary part."""
    return not value.y


def inverse(value: Scalar) -> Scalar:
    """
    Multiplicative inverse of a scalar.

    Raises:
        NotInvertible: If the scalar is zero
    """
    if not value:
        raise NotInvertible("Zero scalar has no inverse")
    return ONE / value


def power(value: Scalar, exponent: int) -> Scalar:
    """
    Integer power of a scalar, negative exponents allowed for nonzero values.
    """
    if exponent < 0:
        value = inverse(value)
        exponent = -exponent
    result = ONE
    for _ in range(exponent):
        result = result * value
    return result


def sign_power(exponent: int) -> int:
    """(-1)**exponent for any integer exponent."""
    return -1 if exponent % 2 else 1


@lru_cache(maxsize=None)
def binom(top: int, bottom: int) -> int:
    """
    Binomial coefficient with the falling-factorial extension to negative top.

    Args:
        top: Upper index (any integer)
        bottom: Lower index

    Returns:
        int: binom(top, bottom), zero for negative bottom
    """
    if bottom < 0:
        return 0
    if top >= 0:
        return math.comb(top, bottom)
    return sign_power(bottom) * math.comb(bottom - top - 1, bottom)

