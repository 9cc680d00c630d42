"""
Twist Module

This module cross-checks A_Q against the eps-twisted tensor product of its
one-color algebras, and verifies the exchange relations of the iterated
construction.
"""

import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from arith import ONE, ZERO, Scalar, format_scalar, inverse
from models.check import CheckReport
from utils.errors import InvalidParameter
from .algebra import QAlgebra, epsilon, sigma_q, split_by_color
from .spec import QSpec
from .words import AlgebraElement, Generator, KIND_X, KIND_Y, Word, format_word, grade

logger = logging.getLogger(__name__)

TensorKey = Tuple[Word, ...]
TensorTerms = Dict[TensorKey, Scalar]

TWIST_MODES = (-1, 0)
SMASH_MODES = (-2, -1, 0, 1, 2)


class TwistedTensorModel:
    """
    The tensor product of the one-color algebras A_(q_ii) with the product
    (a ⊗ ...)(b ⊗ ...) = eps(deg a, deg b) (a b ⊗ ...).
    """

    def __init__(self, spec: QSpec, epsilon_override: Optional[QSpec] = None):
        """
        Initialize the model.

        Args:
            spec: The (l, Q) data
            epsilon_override: Spec whose entries feed the cocycle instead of
                `spec` (used to corrupt eps on purpose)
        """
        self.spec = spec
        self.cocycle_spec = epsilon_override or spec
        self.factors = [QAlgebra(spec.single_color(color)) for color in spec.colors()]
        self._image_cache: Dict[Word, TensorTerms] = {}

    def degree(self, key: TensorKey) -> Tuple[int, ...]:
        """Z^l-degree of a tensor basis element."""
        vector = []
        for part in key:
            vector.append(grade(part, 1)[0])
        return tuple(vector)

    def product(self, left: TensorTerms, right: TensorTerms) -> TensorTerms:
        """Twisted product of two tensor elements."""
        result: TensorTerms = {}
        for left_key, left_coeff in left.items():
            left_degree = self.degree(left_key)
            for right_key, right_coeff in right.items():
                factor = left_coeff * right_coeff * epsilon(
                    left_degree, self.degree(right_key), self.cocycle_spec
                )
                partials: List[Tuple[TensorKey, Scalar]] = [((), factor)]
                for algebra, u, v in zip(self.factors, left_key, right_key):
                    reduced = algebra.reduce_word(u + v)
                    partials = [
                        (key + (word,), coeff * value)
                        for key, coeff in partials
                        for word, value in reduced.items()
                    ]
                    if not partials:
                        break
                for key, coeff in partials:
                    result[key] = result.get(key, ZERO) + coeff
        return {key: coeff for key, coeff in result.items() if coeff}

    def image(self, word: Word) -> TensorTerms:
        """
        The image of a word under X_{i,m} -> 1 ⊗ .. ⊗ X_{1,m} ⊗ .. ⊗ 1, built
        letter by letter with the twisted product.
        """
        cached = self._image_cache.get(word)
        if cached is not None:
            return cached
        if not word:
            result = {tuple(() for _ in self.spec.colors()): ONE}
        else:
            generator = word[-1]
            letter = split_by_color((generator,), self.spec.l)
            result = self.product(self.image(word[:-1]), {letter: ONE})
        self._image_cache[word] = result
        return result

    def image_of(self, element: AlgebraElement) -> TensorTerms:
        """Linear extension of `image`."""
        result: TensorTerms = {}
        for word, coeff in element.terms.items():
            for key, value in self.image(word).items():
                result[key] = result.get(key, ZERO) + coeff * value
        return {key: coeff for key, coeff in result.items() if coeff}


def twist_alphabet(spec: QSpec, modes: Sequence[int] = TWIST_MODES) -> List[Generator]:
    """All generators of every color over a small mode set."""
    return [
        Generator(kind, color, mode)
        for color in spec.colors()
        for kind in (KIND_Y, KIND_X)
        for mode in modes
    ]


def _words_of_length(alphabet: Sequence[Generator], length: int):
    return itertools.product(alphabet, repeat=length)


def twist_check(
    spec: QSpec,
    max_len: int,
    epsilon_override: Optional[QSpec] = None,
    modes: Sequence[int] = TWIST_MODES,
) -> CheckReport:
    """
    Compare multiplication in A_Q with the eps-twisted tensor model.

    For every pair of nonempty words (a, b) with len(a) + len(b) <= max_len,
    the image of the normal form of ab must equal the twisted product of the
    images of a and b.

    Args:
        spec: The (l, Q) data
        max_len: Bound on the total length of each product
        epsilon_override: Spec feeding the cocycle instead of `spec`
        modes: Modes of the generator alphabet

    Returns:
        CheckReport: One comparison per pair
    """
    algebra = QAlgebra(spec)
    model = TwistedTensorModel(spec, epsilon_override)
    alphabet = twist_alphabet(spec, modes)
    report = CheckReport("twist")

    for left_len in range(1, max_len):
        for right_len in range(1, max_len - left_len + 1):
            for left in _words_of_length(alphabet, left_len):
                left_image = model.image(left)
                for right in _words_of_length(alphabet, right_len):
                    reduced = AlgebraElement(algebra.reduce_word(left + right))
                    expected = model.product(left_image, model.image(right))
                    report.record(
                        model.image_of(reduced) == expected,
                        f"{format_word(left)} * {format_word(right)}",
                    )
    report.details["max_len"] = max_len
    logger.info(f"Twist check over {report.passed + report.failed} products: {report.status}")
    return report


def smash_relation_check(
    spec: QSpec,
    modes: Sequence[int] = SMASH_MODES,
    relation_q: Optional[QSpec] = None,
) -> CheckReport:
    """
    Verify the exchange relations between the top color l and the colors i < l.

    X_l X_i = q_li X_i X_l, Y_l Y_i = q_li Y_i Y_l, Y_l X_i = q_li^-1 X_i Y_l
    and X_l Y_i = q_il Y_i X_l for all modes in the window, together with
    X_l a' = sigma_q^-1(a') X_l and Y_l a' = sigma_q(a') Y_l for words a' in
    the first l - 1 colors, where q = (q_1l, ..., q_{l-1,l}).

    Args:
        spec: The (l, Q) data with l >= 2
        modes: Mode window
        relation_q: Spec supplying the expected factors (defaults to `spec`)

    Returns:
        CheckReport: One comparison per relation instance

    Raises:
        InvalidParameter: If l < 2
    """
    if spec.l < 2:
        raise InvalidParameter(f"Smash relations need at least two colors, got l={spec.l}")
    algebra = QAlgebra(spec)
    table = relation_q or spec
    top = spec.l
    report = CheckReport("smash-relations")

    def holds(left: Word, right: Word, factor: Scalar) -> bool:
        lhs = AlgebraElement(algebra.reduce_word(left))
        rhs = AlgebraElement(algebra.reduce_word(right)).scale(factor)
        return lhs == rhs

    for i in range(1, top):
        q_li = table.entry(top, i)
        q_il = table.entry(i, top)
        for n, m in itertools.product(modes, repeat=2):
            cases = (
                (Generator(KIND_X, top, n), Generator(KIND_X, i, m), q_li),
                (Generator(KIND_Y, top, n), Generator(KIND_Y, i, m), q_li),
                (Generator(KIND_Y, top, n), Generator(KIND_X, i, m), inverse(q_li)),
                (Generator(KIND_X, top, n), Generator(KIND_Y, i, m), q_il),
            )
            for upper, lower, factor in cases:
                report.record(
                    holds((upper, lower), (lower, upper), factor),
                    f"{upper} {lower} = {format_scalar(factor)} {lower} {upper}",
                )

    qvec = [table.entry(i, top) for i in range(1, top)]
    lower_alphabet = [g for g in twist_alphabet(spec.leading_colors(top - 1), (-1, 0))]
    samples: List[Word] = [(g,) for g in lower_alphabet]
    samples += [pair for pair in itertools.product(lower_alphabet, repeat=2)]
    for n in (-1, 0):
        for kind, qv in ((KIND_X, [inverse(v) for v in qvec]), (KIND_Y, qvec)):
            upper = Generator(kind, top, n)
            for word in samples:
                element = AlgebraElement.from_word(word)
                lhs = algebra.multiply(AlgebraElement.from_word((upper,)), element)
                rhs = algebra.multiply(sigma_q(element, qv), AlgebraElement.from_word((upper,)))
                report.record(lhs == rhs, f"{upper} {format_word(word)}")

    logger.info(f"Smash relation check for l={top}: {report.status}")
    return report
