"""
Words Module

This module provides generators X_{i,m}, Y_{i,m}, free words, algebra
elements and their text syntax.
"""

import re
import logging
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from arith import ONE, ZERO, Scalar, format_scalar, is_real
from utils.errors import ParseError

logger = logging.getLogger(__name__)

KIND_X = "X"
KIND_Y = "Y"

_TOKEN_PATTERN = re.compile(r'^([XY])\[\s*(\d+)\s*,\s*([+-]?\d+)\s*\]$')


class Generator(NamedTuple):
    """A generator X_{color,mode} or Y_{color,mode}."""

    kind: str
    color: int
    mode: int

    def sort_key(self) -> Tuple[int, int, int, int]:
        """Canonical order: negative block first, then color, Y before X, mode."""
        return (
            0 if self.mode < 0 else 1,
            self.color,
            0 if self.kind == KIND_Y else 1,
            self.mode,
        )

    def with_mode(self, mode: int) -> "Generator":
        """The same field at another mode."""
        return Generator(self.kind, self.color, mode)

    def weight_twice(self) -> int:
        """Twice the L(0)-weight of a creation mode -n: 2n - 1."""
        return -2 * self.mode - 1

    def __str__(self) -> str:
        return f"{self.kind}[{self.color},{self.mode}]"


Word = Tuple[Generator, ...]
GradeVec = Tuple[int, ...]


def X(color: int, mode: int) -> Generator:
    """Shorthand for X_{color,mode}."""
    return Generator(KIND_X, color, mode)


def Y(color: int, mode: int) -> Generator:
    """Shorthand for Y_{color,mode}."""
    return Generator(KIND_Y, color, mode)


def is_canonical(word: Word) -> bool:
    """Check the canonical-order predicate (keys weakly increasing)."""
    return all(a.sort_key() <= b.sort_key() for a, b in zip(word, word[1:]))


def grade(word: Word, l: int) -> GradeVec:
    """
    Z^l-degree of a word: X contributes e_color, Y contributes -e_color.

    Args:
        word: Word to grade
        l: Number of colors

    Returns:
        tuple: The grade vector
    """
    vector = [0] * l
    for generator in word:
        vector[generator.color - 1] += 1 if generator.kind == KIND_X else -1
    return tuple(vector)


def parse_generator(token: str, l: Optional[int] = None) -> Generator:
    """
    Parse one token `X[i,m]` or `Y[i,m]`.

    Args:
        token: Generator text
        l: Number of colors, when the token is read against a spec

    Raises:
        ParseError: If the token is malformed or the color is out of range
    """
    match = _TOKEN_PATTERN.match(token.strip())
    if not match:
        raise ParseError(f"Malformed generator token: '{token}'")
    kind, color, mode = match.group(1), int(match.group(2)), int(match.group(3))
    if color < 1:
        raise ParseError(f"Color must be positive in '{token}'")
    if l is not None and color > l:
        raise ParseError(f"Color {color} out of range 1..{l} in '{token}'")
    return Generator(kind, color, mode)


def parse_word(text: str, l: Optional[int] = None) -> Word:
    """
    Parse whitespace-separated generator tokens, e.g. `X[1,0] Y[1,-1]`.

    Args:
        text: Word text; "1" or an empty string is the empty word
        l: Number of colors, when the word is read against a spec

    Returns:
        Word: The parsed word
    """
    stripped = text.strip()
    if stripped in ("", "1"):
        return ()
    tokens = re.findall(r'[XY]\[[^\]]*\]|\S+', stripped)
    return tuple(parse_generator(token, l) for token in tokens)


def format_word(word: Word) -> str:
    """Format a word as space-separated tokens."""
    return " ".join(str(generator) for generator in word)


def word_key(word: Word) -> Tuple:
    """Deterministic ordering key for printing terms."""
    return (-len(word), tuple(generator.sort_key() for generator in word))


def format_terms(terms: Dict[Tuple, Scalar], body_of, key) -> str:
    """
    Format a linear combination, e.g. `- Y[1,-1] X[1,0] + 1`.

    Args:
        terms: Map basis item -> coefficient
        body_of: Function giving the text of a basis item ("" for the unit)
        key: Sort key for basis items

    Returns:
        str: The formatted combination, "0" when empty
    """
    if not terms:
        return "0"
    pieces = []
    for item in sorted(terms, key=key):
        coeff = terms[item]
        body = body_of(item)
        if is_real(coeff):
            sign = '-' if coeff.x < 0 else '+'
            magnitude = -coeff if sign == '-' else coeff
            coeff_text = "" if magnitude == ONE and body else format_scalar(magnitude)
        else:
            sign = '+'
            coeff_text = f"({format_scalar(coeff)})"
        pieces.append((sign, " ".join(part for part in (coeff_text, body) if part)))

    first_sign, first_text = pieces[0]
    text = f"- {first_text}" if first_sign == '-' else first_text
    for sign, piece in pieces[1:]:
        text += f" {sign} {piece}"
    return text


class AlgebraElement:
    """
    A finite linear combination of words; zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Word, Scalar]] = None):
        self.terms: Dict[Word, Scalar] = {
            word: coeff for word, coeff in (terms or {}).items() if coeff
        }

    @classmethod
    def from_word(cls, word: Iterable[Generator], coeff: Scalar = ONE) -> "AlgebraElement":
        """A single word with a coefficient."""
        return cls({tuple(word): coeff})

    @classmethod
    def one(cls) -> "AlgebraElement":
        """The identity element (empty word)."""
        return cls({(): ONE})

    @classmethod
    def parse(cls, text: str, l: Optional[int] = None) -> "AlgebraElement":
        """Parse a single word into an element, checking colors against l when given."""
        return cls.from_word(parse_word(text, l))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            terms[word] = terms.get(word, ZERO) + coeff
        return AlgebraElement(terms)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(-ONE)

    def scale(self, factor: Scalar) -> "AlgebraElement":
        """Multiply every coefficient by a scalar."""
        return AlgebraElement({word: coeff * factor for word, coeff in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def words(self) -> List[Word]:
        """The words with nonzero coefficient in print order."""
        return sorted(self.terms, key=word_key)

    def format(self) -> str:
        """Text form such as `- Y[1,-1] X[1,0] + 1`."""
        return format_terms(self.terms, format_word, word_key)

    def __repr__(self) -> str:
        return f"AlgebraElement({self.format()})"
