"""
Pseudo-Automorphism Module

This module provides the series-valued operators Phi_i(x) and Phi_i(x)^-1
on the vacuum module of Q(0), defined on normal words by
Phi(x)(g_{-N} w) = sum_k (-1)^k s^(k)(x)/k! g_{-N+k} Phi(x)(w), where s is
p_ij(x) for X letters of color j and p_ij(x)^-1 for Y letters (swapped for
the inverse).
"""

import itertools
import logging
from typing import Dict, Iterable, List, Tuple

from arith import (
    ONE,
    ZERO,
    CoeffWindow,
    Scalar,
    TruncSeries,
    series_divided_derivative,
    series_mul,
    series_one,
    series_rename,
    series_scale,
    sign_power,
)
from models.check import CheckReport
from qalgebra import Generator, KIND_X, KIND_Y, Word
from vacuum import State, format_basis_word
from vertex import VertexEngine
from .spec import SERIES_VAR, QSeriesSpec

logger = logging.getLogger(__name__)

SeriesTerms = Dict[Word, TruncSeries]


class SeriesState:
    """
    A state with truncated-series coefficients, sum_w s_w(x) w.
    """

    def __init__(self, terms: SeriesTerms = None, order: int = 0, var: str = SERIES_VAR):
        self.var = var
        self.order = order
        self.terms: SeriesTerms = {word: s for word, s in (terms or {}).items() if s}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self) -> Iterable[Tuple[Word, TruncSeries]]:
        return self.terms.items()

    def words(self) -> List[Word]:
        return list(self.terms)

    def coefficient_state(self, degree: int) -> State:
        """The state multiplying x^degree."""
        return State({word: s.coefficient(degree) for word, s in self.terms.items()})

    def max_weight_twice(self) -> int:
        return State({word: ONE for word in self.terms}).max_weight_twice()

    def format(self) -> str:
        parts = []
        for word, s in self.terms.items():
            coefficients = ", ".join(s.format_coefficients())
            parts.append(f"[{coefficients}] {format_basis_word(word)}")
        return " + ".join(parts) if parts else "0"


def _accumulate(into: SeriesTerms, word: Word, value: TruncSeries) -> None:
    existing = into.get(word)
    into[word] = value if existing is None else existing + value


class PseudoAutomorphism:
    """
    Phi_i(x) (or its inverse) on the vacuum module, certified below `order`.
    """

    def __init__(self, engine: VertexEngine, spec: QSeriesSpec, color: int, inverse: bool = False, order: int = None):
        """
        Initialize the operator.

        Args:
            engine: Vertex engine of the constant data Q(0)
            spec: The deformed data
            color: The color i of Phi_i
            inverse: Build Phi_i^-1 instead
            order: Working truncation order, defaults to spec.order
        """
        self.engine = engine
        self.module = engine.module
        self.spec = spec
        self.color = color
        self.inverse = inverse
        self.order = spec.order if order is None else order
        self._coefficients: Dict[Tuple[str, int, int], TruncSeries] = {}
        self._memo: Dict[Word, SeriesTerms] = {}

    def _symbol(self, letter_kind: str, letter_color: int, order: int) -> TruncSeries:
        use_inverse = (letter_kind == KIND_Y) != self.inverse
        if use_inverse:
            return self.spec.p_inverse_series(self.color, letter_color, order)
        return self.spec.p_series(self.color, letter_color, order)

    def coefficient(self, letter: Generator, k: int) -> TruncSeries:
        """(-1)^k s^(k)(x)/k! for the symbol s of a letter."""
        key = (letter.kind, letter.color, k)
        cached = self._coefficients.get(key)
        if cached is None:
            symbol = self._symbol(letter.kind, letter.color, self.order + k)
            cached = series_scale(series_divided_derivative(symbol, k), ONE * sign_power(k)).truncate(self.order)
            self._coefficients[key] = cached
        return cached

    def apply_word(self, word: Word) -> SeriesTerms:
        """
        Phi applied to a normal creation word.

        Returns:
            dict: Map normal word -> series
        """
        cached = self._memo.get(word)
        if cached is not None:
            return cached
        if not word:
            result = {(): series_one(SERIES_VAR, self.order)}
        else:
            letter, rest = word[0], word[1:]
            inner = self.apply_word(rest)
            result = self._apply_letter(letter, inner)
        self._memo[word] = result
        return result

    def _apply_letter(self, letter: Generator, inner: SeriesTerms) -> SeriesTerms:
        result: SeriesTerms = {}
        top = max((self.engine.generator_bound(letter, w) for w in inner), default=0)
        for k in range(0, top - letter.mode):
            c_k = self.coefficient(letter, k)
            if not c_k:
                continue
            shifted = letter.with_mode(letter.mode + k)
            for w, series in inner.items():
                product = series_mul(c_k, series).truncate(self.order)
                if not product:
                    continue
                for image, value in self.module.act_word(shifted, w).items():
                    _accumulate(result, image, series_scale(product, value))
        return {w: s for w, s in result.items() if s}

    def apply(self, state: State) -> SeriesState:
        """Phi applied to a state."""
        result: SeriesTerms = {}
        for word, coeff in state.terms.items():
            for image, series in self.apply_word(word).items():
                _accumulate(result, image, series_scale(series, coeff))
        return SeriesState(result, self.order)


def _letters(spec: QSeriesSpec, modes: Iterable[int]) -> List[Generator]:
    return [
        Generator(kind, color, mode)
        for color in range(1, spec.l + 1)
        for kind in (KIND_X, KIND_Y)
        for mode in modes
    ]


def pseudo_law_check(
    engine: VertexEngine,
    spec: QSeriesSpec,
    color: int,
    max_weight,
    modes: Iterable[int] = (-2, -1, 0, 1),
    inverse: bool = False,
) -> CheckReport:
    """
    Check Phi_i(x) g_n w = sum_k (-1)^k s^(k)(x)/k! g_{n+k} Phi_i(x) w for
    every generator g, mode n and basis word w up to a weight.

    Args:
        engine: Vertex engine of Q(0)
        spec: The deformed data
        color: The color i
        max_weight: Weight cutoff for w
        modes: Modes n of the generator
        inverse: Check Phi_i^-1 instead

    Returns:
        CheckReport: One comparison per (g, n, w), on every certified degree
    """
    phi = PseudoAutomorphism(engine, spec, color, inverse)
    report = CheckReport("pseudo-law" + ("-inverse" if inverse else ""))
    for word in engine.module.enumerate_basis(max_weight):
        image = phi.apply_word(word)
        for letter in _letters(spec, modes):
            lhs = phi.apply(engine.module.act(letter, State.basis(word)))
            rhs = SeriesState(phi._apply_letter(letter, image), phi.order)
            same = all(
                lhs.coefficient_state(d) == rhs.coefficient_state(d) for d in range(phi.order)
            )
            report.record(same, f"Phi_{color} {letter} on {format_basis_word(word)}")
    report.details["order"] = phi.order
    return report


def _compose(first: PseudoAutomorphism, first_var: int, second: PseudoAutomorphism, word: Word) -> Dict[Tuple[int, int], State]:
    """
    second(y) first(x) word as cells (deg_x1, deg_x2) -> state, where
    first_var says which of x1 (0) or x2 (1) the first operator uses.
    """
    cells: Dict[Tuple[int, int], Dict[Word, Scalar]] = {}
    for middle, outer_series in first.apply_word(word).items():
        for image, inner_series in second.apply_word(middle).items():
            for d_first, c_first in outer_series.coeffs.items():
                for d_second, c_second in inner_series.coeffs.items():
                    cell = (d_first, d_second) if first_var == 0 else (d_second, d_first)
                    terms = cells.setdefault(cell, {})
                    terms[image] = terms.get(image, ZERO) + c_first * c_second
    return {cell: State(terms) for cell, terms in cells.items()}


def commutativity_check(engine: VertexEngine, spec: QSeriesSpec, i: int, j: int, max_weight) -> CheckReport:
    """
    Check Phi_i(x1) Phi_j(x2) = Phi_j(x2) Phi_i(x1), for all four choices of
    Phi versus its inverse, on every basis word up to a weight.

    Returns:
        CheckReport: One comparison per word and choice; details carry the
            number of certified cells
    """
    report = CheckReport("phi-commutativity")
    order = spec.order
    box = ((0, order - 1), (0, order - 1))
    valid = frozenset(itertools.product(range(order), repeat=2))
    cells_compared = 0
    for inverse_i, inverse_j in itertools.product((False, True), repeat=2):
        phi_i = PseudoAutomorphism(engine, spec, i, inverse_i, order)
        phi_j = PseudoAutomorphism(engine, spec, j, inverse_j, order)
        for word in engine.module.enumerate_basis(max_weight):
            left = CoeffWindow(("x1", "x2"), box, _compose(phi_j, 1, phi_i, word), valid)
            right = CoeffWindow(("x1", "x2"), box, _compose(phi_i, 0, phi_j, word), valid)
            comparison = left.compare(right)
            cells_compared += comparison.matched + len(comparison.mismatched)
            report.record(
                comparison.equal,
                f"Phi_{i}{'^-1' if inverse_i else ''} Phi_{j}{'^-1' if inverse_j else ''} "
                f"on {format_basis_word(word)} at {comparison.mismatched[:3]}",
            )
    report.details["cells"] = cells_compared
    return report


def inverse_check(engine: VertexEngine, spec: QSeriesSpec, color: int, max_weight) -> CheckReport:
    """
    Check Phi_i(x) Phi_i(x)^-1 = Phi_i(x)^-1 Phi_i(x) = 1 on basis words up
    to a weight, below the truncation order.
    """
    report = CheckReport("phi-inverse")
    forward = PseudoAutomorphism(engine, spec, color, False)
    backward = PseudoAutomorphism(engine, spec, color, True)
    for first, second in ((backward, forward), (forward, backward)):
        for word in engine.module.enumerate_basis(max_weight):
            total: SeriesTerms = {}
            for middle, outer in first.apply_word(word).items():
                for image, inner in second.apply_word(middle).items():
                    _accumulate(total, image, series_mul(outer, inner).truncate(spec.order))
            support = {w for w, s in total.items() if s}
            same = support == {word} and total[word].equal_within(series_one(SERIES_VAR, spec.order))
            report.record(same, f"Phi Phi^-1 on {format_basis_word(word)}")
    return report


def phi_apply(spec: QSeriesSpec, color: int, state: State, inverse: bool = False, var: str = SERIES_VAR) -> SeriesState:
    """
    Module-level shortcut: Phi_i(var) (or its inverse) applied to a state.
    """
    engine = VertexEngine(spec.constant_spec())
    image = PseudoAutomorphism(engine, spec, color, inverse).apply(state)
    if var == SERIES_VAR:
        return image
    renamed = {word: series_rename(s, var) for word, s in image.items()}
    return SeriesState(renamed, image.order, var)


def format_series_state(image: SeriesState) -> Dict[str, List[str]]:
    """Coefficient lists per basis word, for reports."""
    return {format_basis_word(word): s.format_coefficients() for word, s in image.items()}


