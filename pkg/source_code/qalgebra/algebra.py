"""
Q-Algebra Module

This module provides the associative algebra on the generators X_{i,m},
Y_{i,m}: normal-form rewriting, multiplication, the grading cocycle and the
sigma_q automorphisms.
"""

import logging
from typing import Dict, Optional, Sequence, Tuple

from arith import ONE, ZERO, Scalar, inverse, power
from utils.errors import InvalidParameter
from .spec import QSpec, validate_q
from .words import AlgebraElement, Generator, GradeVec, KIND_X, Word, format_word, grade

logger = logging.getLogger(__name__)

Terms = Dict[Word, Scalar]


class QAlgebra:
    """
    The algebra A_Q with a memoized normal-form reducer.

    Canonical order: every negative mode precedes every nonnegative mode;
    inside each block generators are sorted by color, then Y before X,
    then mode.
    """

    def __init__(self, spec: QSpec):
        """
        Initialize the algebra.

        Args:
            spec: The (l, Q) data

        Raises:
            SkewViolation: If the spec is not skew
        """
        validate_q(spec)
        self.spec = spec
        self._cache: Dict[Word, Terms] = {}

    def swap_factor(self, a: Generator, b: Generator) -> Scalar:
        """
        Scalar f with ab = f ba (+ contact term).

        Same kinds pick up q_{a,b}; mixed kinds pick up q_{b,a}.
        """
        if a.kind == b.kind:
            return self.spec.entry(a.color, b.color)
        return self.spec.entry(b.color, a.color)

    def contact(self, a: Generator, b: Generator) -> Scalar:
        """
        The delta term c in ab = f ba + c.

        X_{i,m} Y_{i,n} gives 1 and Y_{i,n} X_{i,m} gives -q_ii when m + n + 1 = 0.
        """
        if a.color != b.color or a.kind == b.kind or a.mode + b.mode + 1 != 0:
            return ZERO
        if a.kind == KIND_X:
            return ONE
        return -self.spec.entry(a.color, a.color)

    def _is_inversion(self, a: Generator, b: Generator) -> bool:
        if a == b:
            return self.spec.is_fermionic(a.color)
        return a.sort_key() > b.sort_key()

    def reduce_word(self, word: Word) -> Terms:
        """
        Normal form of a single word.

        Repeatedly rewrites the leftmost out-of-order adjacent pair; an
        adjacent equal fermionic pair is its own inversion and kills the word.

        Args:
            word: Any word

        Returns:
            dict: Map canonical word -> coefficient
        """
        cached = self._cache.get(word)
        if cached is not None:
            return cached

        position = None
        for index in range(len(word) - 1):
            if self._is_inversion(word[index], word[index + 1]):
                position = index
                break

        if position is None:
            result: Terms = {word: ONE}
        else:
            a, b = word[position], word[position + 1]
            result = {}
            if a != b:
                swapped = word[:position] + (b, a) + word[position + 2:]
                _accumulate(result, self.reduce_word(swapped), self.swap_factor(a, b))
                term = self.contact(a, b)
                if term:
                    shorter = word[:position] + word[position + 2:]
                    _accumulate(result, self.reduce_word(shorter), term)
            result = {w: c for w, c in result.items() if c}

        self._cache[word] = result
        return result

    def normal_form(self, element: AlgebraElement) -> AlgebraElement:
        """
        Rewrite every word of an element into canonical order.

        Args:
            element: Element to reduce

        Returns:
            AlgebraElement: The normal form

        Raises:
            InvalidParameter: If a generator color lies outside 1..l
        """
        for word in element.terms:
            for generator in word:
                if not 1 <= generator.color <= self.spec.l:
                    raise InvalidParameter(
                        f"Color {generator.color} out of range 1..{self.spec.l} in {format_word(word)}"
                    )
        terms: Terms = {}
        for word, coeff in element.terms.items():
            _accumulate(terms, self.reduce_word(word), coeff)
        return AlgebraElement(terms)

    def multiply(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        """Product of two elements, in normal form."""
        terms: Terms = {}
        for left, left_coeff in a.terms.items():
            for right, right_coeff in b.terms.items():
                _accumulate(terms, self.reduce_word(left + right), left_coeff * right_coeff)
        return AlgebraElement(terms)

    def grade(self, word: Word) -> GradeVec:
        """Z^l-degree of a word."""
        return grade(word, self.spec.l)

    def epsilon(self, alpha: GradeVec, beta: GradeVec) -> Scalar:
        """
        The bimultiplicative cocycle with eps(e_i, e_j) = q_ij for i > j, 1 otherwise.

        Args:
            alpha: Left degree
            beta: Right degree

        Returns:
            Scalar: eps(alpha, beta)
        """
        return epsilon(alpha, beta, self.spec)

    def sigma_q(self, element: AlgebraElement, qvec: Sequence[Scalar]) -> AlgebraElement:
        """Apply the automorphism sigma_q (see `sigma_q`)."""
        return sigma_q(element, qvec)


def _accumulate(target: Terms, source: Terms, factor: Scalar) -> None:
    for word, coeff in source.items():
        target[word] = target.get(word, ZERO) + coeff * factor


def epsilon(alpha: GradeVec, beta: GradeVec, spec: QSpec) -> Scalar:
    """
    Bimultiplicative extension of eps(e_i, e_j) = q_ij (i > j), 1 (i <= j).

    Args:
        alpha: Left degree in Z^l
        beta: Right degree in Z^l
        spec: The spec supplying q_ij

    Returns:
        Scalar: The cocycle value
    """
    value = ONE
    for i, a_i in enumerate(alpha, start=1):
        if not a_i:
            continue
        for j, b_j in enumerate(beta, start=1):
            if b_j and i > j:
                value = value * power(spec.entry(i, j), a_i * b_j)
    return value


def sigma_q(element: AlgebraElement, qvec: Sequence[Scalar]) -> AlgebraElement:
    """
    The automorphism X_{i,m} -> q_i X_{i,m}, Y_{i,m} -> q_i^-1 Y_{i,m}.

    Colors beyond the length of `qvec` are fixed.

    Args:
        element: Element to transform
        qvec: Nonzero scalars q_1, ..., q_k

    Returns:
        AlgebraElement: The image

    Raises:
        InvalidParameter: If some q_i is zero
    """
    if any(not value for value in qvec):
        raise InvalidParameter(f"sigma_q needs nonzero scalars, got {list(qvec)}")
    inverses = [inverse(value) for value in qvec]
    terms: Terms = {}
    for word, coeff in element.terms.items():
        factor = coeff
        for generator in word:
            if generator.color > len(qvec):
                continue
            index = generator.color - 1
            factor = factor * (qvec[index] if generator.kind == KIND_X else inverses[index])
        terms[word] = factor
    return AlgebraElement(terms)


def normal_form(element: AlgebraElement, spec: QSpec, algebra: Optional[QAlgebra] = None) -> AlgebraElement:
    """
    Normal form of an element under the relations of `spec`.

    Args:
        element: Element to reduce
        spec: The (l, Q) data
        algebra: Existing algebra whose cache should be reused

    Returns:
        AlgebraElement: The canonical form
    """
    return (algebra or QAlgebra(spec)).normal_form(element)


def recolor(word: Word, color: int) -> Word:
    """The same word with every generator moved to one color."""
    return tuple(Generator(g.kind, color, g.mode) for g in word)


def split_by_color(word: Word, l: int) -> Tuple[Word, ...]:
    """Per-color subwords, each recolored to color 1."""
    parts = [[] for _ in range(l)]
    for generator in word:
        parts[generator.color - 1].append(Generator(generator.kind, 1, generator.mode))
    return tuple(tuple(part) for part in parts)
