"""
State Module

This module provides vectors of the vacuum module, stored in the basis of
normal creation words applied to the vacuum.
"""

import logging
from typing import Dict, Iterable, List, Optional, Tuple

from arith import ONE, ZERO, HalfInt, Scalar
from qalgebra import Word, format_terms, format_word
from qalgebra.words import word_key

logger = logging.getLogger(__name__)

VACUUM_TEXT = "|0>"


def word_weight_twice(word: Word) -> int:
    """Twice the L(0)-weight of a creation word: mode -n contributes 2n - 1."""
    return sum(-2 * generator.mode - 1 for generator in word)


def word_weight(word: Word) -> HalfInt:
    """L(0)-weight of a creation word."""
    return HalfInt(word_weight_twice(word))


def format_basis_word(word: Word) -> str:
    """Text of a basis vector, e.g. `Y[1,-1] X[1,-1] |0>`."""
    if not word:
        return VACUUM_TEXT
    return f"{format_word(word)} {VACUUM_TEXT}"


class State:
    """
    A finite combination of normal words applied to the vacuum.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Word, Scalar]] = None):
        self.terms: Dict[Word, Scalar] = {
            word: coeff for word, coeff in (terms or {}).items() if coeff
        }

    @classmethod
    def vacuum(cls) -> "State":
        """The vacuum vector 1."""
        return cls({(): ONE})

    @classmethod
    def basis(cls, word: Word, coeff: Scalar = ONE) -> "State":
        """A single basis vector; the word must already be normal."""
        return cls({tuple(word): coeff})

    @classmethod
    def zero(cls) -> "State":
        """The zero vector."""
        return cls()

    def __add__(self, other: "State") -> "State":
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            terms[word] = terms.get(word, ZERO) + coeff
        return State(terms)

    def __sub__(self, other: "State") -> "State":
        return self + other.scale(-ONE)

    def __neg__(self) -> "State":
        return self.scale(-ONE)

    def scale(self, factor: Scalar) -> "State":
        """Multiply every coefficient by a scalar."""
        if not factor:
            return State()
        return State({word: coeff * factor for word, coeff in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, State):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def words(self) -> List[Word]:
        """Basis words with nonzero coefficient, in print order."""
        return sorted(self.terms, key=word_key)

    def coefficient(self, word: Word) -> Scalar:
        """Coefficient of one basis word."""
        return self.terms.get(word, ZERO)

    def weights_twice(self) -> List[int]:
        """Sorted distinct twice-weights of the components."""
        return sorted({word_weight_twice(word) for word in self.terms})

    def max_weight_twice(self) -> int:
        """Twice the top weight; -1 for the zero vector."""
        return max((word_weight_twice(word) for word in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        """Check whether all components share one weight."""
        return len(self.weights_twice()) <= 1

    def component(self, twice_weight: int) -> "State":
        """The homogeneous component of a given twice-weight."""
        return State({w: c for w, c in self.terms.items() if word_weight_twice(w) == twice_weight})

    def items(self) -> Iterable[Tuple[Word, Scalar]]:
        """Terms in print order."""
        return ((word, self.terms[word]) for word in self.words())

    def format(self) -> str:
        """Text form such as `Y[1,-1] X[1,-1] |0> + 1/2 |0>`."""
        return format_terms(self.terms, format_basis_word, word_key)

    def __repr__(self) -> str:
        return f"State({self.format()})"


def linear_combination(pairs: Iterable[Tuple[Scalar, State]]) -> State:
    """Sum of scalar multiples of states."""
    terms: Dict[Word, Scalar] = {}
    for factor, state in pairs:
        if not factor:
            continue
        for word, coeff in state.terms.items():
            terms[word] = terms.get(word, ZERO) + factor * coeff
    return State(terms)
