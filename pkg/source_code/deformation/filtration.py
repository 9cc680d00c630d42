"""
Filtration Module

This module provides the rank-based filtration checks: the increasing
filtration F of the deformed algebra and its associated graded dimensions
against V_Q(0), the length filtration E of V_Q, and the linear independence
of the normal vectors of the half subalgebra generated by the a-fields.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from arith import HalfInt, exact_rank, in_span, independent_rows
from models.check import CheckReport
from qalgebra import Generator, KIND_X, KIND_Y, QSpec, Word
from vacuum import State, VacuumModule, word_weight_twice
from vertex import VertexEngine
from .dressed import DressedModel

logger = logging.getLogger(__name__)

Letters = Tuple[Generator, ...]


def nominal_twice(letters: Sequence[Generator]) -> int:
    """Twice the nominal weight: mode m contributes -2m - 1."""
    return sum(-2 * letter.mode - 1 for letter in letters)


def mode_sum(letters: Sequence[Generator]) -> int:
    return sum(letter.mode for letter in letters)


def _walk(
    l: int,
    max_twice: int,
    annihilators: int,
    start: Optional[State] = None,
    act: Optional[Callable[[Generator, State], State]] = None,
) -> Iterator[Tuple[Letters, Optional[State]]]:
    """
    Grow letter sequences from the right. Every nonempty partial sequence
    keeps a nominal twice-weight in [1, max_twice + 1]; a partial state of
    weight 0 is a multiple of the vacuum and adds nothing new. When `act`
    is given, states are carried along and zero states are pruned.
    """
    cap = max_twice + 1
    letters = [
        Generator(kind, color, mode)
        for mode in range(-((cap + 1) // 2), (cap - 2) // 2 + 1)
        for color in range(1, l + 1)
        for kind in (KIND_X, KIND_Y)
    ]

    def extend(suffix: Letters, twice: int, used: int, state: Optional[State]):
        if twice <= max_twice:
            yield suffix, state
        for letter in letters:
            reached = twice + letter.weight_twice()
            extra = 1 if letter.mode >= 0 else 0
            if not 1 <= reached <= cap or used + extra > annihilators:
                continue
            image = state
            if act is not None:
                image = act(letter, state)
                if not image:
                    continue
            yield from extend((letter,) + suffix, reached, used + extra, image)

    return extend((), 0, 0, start)


def dressed_sequences(l: int, max_twice: int, annihilators: int = 1) -> List[Letters]:
    """
    Letter sequences of nominal twice-weight <= max_twice. Modes may be
    negative, zero or positive and zero modes may sit anywhere, with at
    most `annihilators` letters of mode >= 0 per sequence.

    Args:
        l: Number of colors
        max_twice: Twice the nominal weight cutoff
        annihilators: Cap on letters of nonnegative mode

    Returns:
        list: Sequences, each a tuple of Generator letters
    """
    return [letters for letters, _ in _walk(l, max_twice, annihilators)]


@dataclass
class FiltrationLevel:
    """
    F_n up to a nominal weight: a basis of the span of the dressed words with
    mode sum >= -n, and the dimension of the part spanned by words of
    nominal twice-weight <= w for every w.
    """

    n: int
    max_twice: int
    states: List[State] = field(default_factory=list)
    dims: Dict[int, int] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return len(self.states)

    def dim(self, twice: int) -> int:
        if twice < 0 or not self.dims:
            return 0
        return self.dims[min(twice, self.max_twice)]

    def contains(self, state: State) -> bool:
        """Check whether a state lies in this level."""
        return in_span([s.terms for s in self.states], state.terms)


def _spanning_words(model: DressedModel, limit: int, annihilators: int) -> List[Tuple[int, int, State]]:
    """(nominal twice-weight, -mode sum, state) for every nonzero dressed word."""

    def act(letter: Generator, state: State) -> State:
        return model.dressed_mode(letter.color, letter.kind, letter.mode, state)

    words = [
        (nominal_twice(letters), -mode_sum(letters), state)
        for letters, state in _walk(model.spec.l, limit, annihilators, State.vacuum(), act)
    ]
    logger.info(f"Filtration: {len(words)} nonzero dressed words up to twice-weight {limit}")
    return words


def _reduce_level(n: int, limit: int, words: Sequence[Tuple[int, State]]) -> FiltrationLevel:
    ordered = sorted(words, key=lambda item: item[0])
    kept = independent_rows([state.terms for _, state in ordered])
    weights = [ordered[index][0] for index in kept]
    return FiltrationLevel(
        n,
        limit,
        [ordered[index][1] for index in kept],
        {twice: sum(1 for t in weights if t <= twice) for twice in range(limit + 1)},
    )


def filtration_F(model: DressedModel, n: int, max_weight, annihilators: int = 1) -> FiltrationLevel:
    """
    The level F_n: dressed words with mode sum >= -n, truncated to nominal
    weight <= max_weight and reduced to a basis.

    Args:
        model: Dressed model of the deformed data
        n: Filtration degree
        max_weight: Nominal weight cutoff W
        annihilators: Cap on letters of nonnegative mode per word

    Returns:
        FiltrationLevel: Basis and dimensions of the level
    """
    limit = HalfInt.of(max_weight).twice_value
    if n < 0:
        return _reduce_level(n, limit, [])
    words = _spanning_words(model, limit, annihilators)
    return _reduce_level(n, limit, [(twice, state) for twice, degree, state in words if degree <= n])


def filtration_levels(model: DressedModel, max_weight, annihilators: int = 1) -> List[FiltrationLevel]:
    """F_0, F_1, ... up to the largest degree any spanning word reaches."""
    limit = HalfInt.of(max_weight).twice_value
    words = _spanning_words(model, limit, annihilators)
    top = max((degree for _, degree, _ in words), default=0)
    return [
        _reduce_level(n, limit, [(twice, state) for twice, degree, state in words if degree <= n])
        for n in range(top + 1)
    ]


def constant_counts(spec: QSpec, max_weight) -> Dict[Tuple[int, int], int]:
    """Basis words of V_Q by (twice-weight, minus the mode sum)."""
    counts: Dict[Tuple[int, int], int] = {}
    for word in VacuumModule(spec).enumerate_basis(max_weight):
        key = (word_weight_twice(word), -mode_sum(word))
        counts[key] = counts.get(key, 0) + 1
    return counts


def gr_compare(model: DressedModel, max_weight) -> CheckReport:
    """
    Compare the bigraded dimensions of Gr_F with the basis counts of V_Q(0)
    by weight and degree, and their weight totals with the graded
    dimensions.

    g(w, n) = R(w,n) - R(w,n-1) - R(w-1/2,n) + R(w-1/2,n-1), where R(w, n)
    is the dimension of F_n spanned by words of nominal weight <= w.

    Returns:
        CheckReport: One comparison per (weight, degree) cell and per weight;
            details carry the table
    """
    levels = filtration_levels(model, max_weight)
    limit = levels[0].max_twice
    expected = constant_counts(model.constant, max_weight)

    def rank(twice: int, n: int) -> int:
        if n < 0:
            return 0
        return levels[min(n, len(levels) - 1)].dim(twice)

    report = CheckReport("gr-compare")
    rows = []
    top = max(len(levels) - 1, limit)
    for twice in range(limit + 1):
        total = 0
        for n in range(top + 1):
            value = rank(twice, n) - rank(twice, n - 1) - rank(twice - 1, n) + rank(twice - 1, n - 1)
            want = expected.get((twice, n), 0)
            total += value
            report.record(value == want, f"g({HalfInt(twice)}, {n}) = {value}, expected {want}")
            if value or want:
                rows.append({"weight": str(HalfInt(twice)), "degree": n, "graded": value, "expected": want})
        dimension = model.module.graded_dim(HalfInt(twice))
        report.record(total == dimension, f"weight {HalfInt(twice)}: {total} vs {dimension}")
    report.details["table"] = rows
    report.details["degrees"] = len(levels) - 1
    return report


def _length_spans(engine: VertexEngine, limit: int, max_length: int) -> List[List[Dict[Word, object]]]:
    """
    Spanning sets of E_r up to a twice-weight, for r = 0..max_length, grown
    from the vacuum by generator actions.
    """
    reach = (limit + 1) // 2 + 1
    generators = [
        Generator(kind, color, mode)
        for color in engine.spec.colors()
        for kind in (KIND_X, KIND_Y)
        for mode in range(-reach, reach)
    ]
    spans = [[State.vacuum().terms]]
    frontier = [State.vacuum()]
    for _ in range(max_length):
        span = list(spans[-1])
        next_frontier = []
        for state in frontier:
            for generator in generators:
                image = engine.module.act(generator, state)
                if not image or image.max_weight_twice() > limit or in_span(span, image.terms):
                    continue
                span.append(image.terms)
                next_frontier.append(image)
        spans.append(span)
        frontier = next_frontier
    return spans


def filtration_E_check(
    spec: QSpec,
    max_weight,
    samples: int,
    seed: int = 0,
    engine: VertexEngine = None,
) -> CheckReport:
    """
    Check a_k E_m within E_{m+n} for random basis states a in E_m and
    b in E_n, where E_r is spanned by products of at most r generator modes
    on the vacuum. The mode k is drawn so that a_k b stays within the weight
    cutoff.

    Args:
        spec: The (l, Q) data
        max_weight: Weight cutoff W
        samples: Number of random triples
        seed: Random seed
        engine: Engine to reuse

    Returns:
        CheckReport: One containment test per sample
    """
    engine = engine or VertexEngine(spec)
    limit = HalfInt.of(max_weight).twice_value
    basis = engine.module.enumerate_basis(max_weight)
    max_length = max(len(word) for word in basis)
    spans = _length_spans(engine, limit, 2 * max_length)
    rng = random.Random(seed)
    report = CheckReport("filtration-E")
    for _ in range(samples):
        a, b = rng.choice(basis), rng.choice(basis)
        low = -((limit + 2 - word_weight_twice(a) - word_weight_twice(b)) // 2)
        k = rng.randint(low, low + 4)
        result = engine.state_mode(State.basis(a), k, State.basis(b))
        target = spans[len(a) + len(b)]
        report.record(
            in_span(target, result.terms),
            f"{State.basis(a).format()} _{k} {State.basis(b).format()} outside E_{len(a) + len(b)}",
        )
    report.details["ranks"] = [exact_rank(span) for span in spans]
    return report


def half_sequences(spec: QSpec, max_weight) -> List[Letters]:
    """
    Normal vectors of the half subalgebra: per color a^(i)_{-n_1} ... with
    n_1 >= n_2 >= ... (strict for fermionic colors), colors in order 1..l,
    up to a nominal weight.
    """
    limit = HalfInt.of(max_weight).twice_value

    def color_runs(color: int, budget: int) -> List[Tuple[Tuple[Generator, ...], int]]:
        runs = []
        strict = spec.is_fermionic(color)

        def extend(prefix: Tuple[Generator, ...], largest: int, left: int) -> None:
            runs.append((prefix, left))
            top = largest - 1 if strict else largest
            for n in range(1, top + 1):
                cost = 2 * n - 1
                if cost <= left:
                    extend(prefix + (Generator(KIND_X, color, -n),), n, left - cost)

        extend((), (budget + 1) // 2 + 1, budget)
        return runs

    results: List[Letters] = []

    def combine(color: int, prefix: Letters, budget: int) -> None:
        if color > spec.l:
            results.append(prefix)
            return
        for run, left in color_runs(color, budget):
            combine(color + 1, prefix + run, left)

    combine(1, (), limit)
    return results


def half_basis_check(model: DressedModel, max_weight) -> CheckReport:
    """
    Rank test of the normal a-vectors of the half subalgebra: the dressed
    vectors must be linearly independent.

    Returns:
        CheckReport: One rank comparison per nominal weight
    """
    report = CheckReport("half-basis")
    sequences = half_sequences(model.constant, max_weight)
    by_weight: Dict[int, List[Dict]] = {}
    for letters in sequences:
        by_weight.setdefault(nominal_twice(letters), []).append(model.dressed_word(letters).terms)
    rows = []
    cumulative: List[Dict] = []
    for twice in sorted(by_weight):
        cumulative.extend(by_weight[twice])
        rank = exact_rank(cumulative)
        report.record(rank == len(cumulative), f"weight {HalfInt(twice)}: rank {rank} of {len(cumulative)}")
        rows.append({"weight": str(HalfInt(twice)), "vectors": len(cumulative), "rank": rank})
    report.details["table"] = rows
    return report
