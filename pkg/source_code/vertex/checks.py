"""
Vertex Checks Module

This module provides the identity checks of the state-field map: creation,
translation, truncation, weights, S-locality, weak associativity, the
S-Jacobi identity and the mode-product expansion.
"""

import random
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from arith import (
    EXPAND_IN_SECOND,
    ONE,
    ZERO,
    CoeffWindow,
    Scalar,
    TruncSeries,
    binom,
    expand_two_var,
    format_scalar,
    scalar,
    sign_power,
)
from models.check import CheckReport
from qalgebra import Generator, Word
from vacuum import State, linear_combination
from .engine import VertexEngine

logger = logging.getLogger(__name__)

KERNEL_VAR = "x"


@dataclass(frozen=True)
class Braiding:
    """
    Generator-anchored S-locality data: (x1 - x2)^k kills the contact terms
    and Y(u, x1) Y(v, x2) = factor Y(v, x2) Y(u, x1) after multiplication.
    """

    k: int
    factor: Scalar

    def to_dict(self):
        return {"k": self.k, "factor": format_scalar(self.factor)}


def leading_generator(state: State) -> Optional[Generator]:
    """The generator g when the state is exactly g_{-1}|0>, else None."""
    if len(state.terms) != 1:
        return None
    (word, coeff), = state.terms.items()
    if coeff != ONE or len(word) != 1 or word[0].mode != -1:
        return None
    return word[0]


def braiding(engine: VertexEngine, generator: Generator, word: Word) -> Braiding:
    """
    Braiding of a generator field against the field of a normal word.

    The factor is the product of the per-letter swap factors and k is the
    annihilation degree of the generator on the word.
    """
    factor = ONE
    for letter in word:
        factor = factor * engine.algebra.swap_factor(generator, letter)
    return Braiding(engine.generator_bound(generator, word), factor)


def _single_word(state: State) -> Word:
    if len(state.terms) != 1:
        raise ValueError("Braiding data needs a single basis word")
    return next(iter(state.terms))


def creation_check(engine: VertexEngine, v: State, order: int) -> CheckReport:
    """
    Compare v_{-k-1}|0> with D^k v / k! for k < order.

    Args:
        engine: Vertex engine
        v: State under test
        order: Number of coefficients compared

    Returns:
        CheckReport: One comparison per k
    """
    report = CheckReport("creation")
    vacuum = State.vacuum()
    power = v
    factorial = 1
    for k in range(order):
        if k:
            power = engine.dop(power)
            factorial *= k
        expected = power.scale(ONE / scalar(factorial))
        report.record(engine.state_mode(v, -k - 1, vacuum) == expected, f"k={k} for {v.format()}")
    return report


def derivation_check(engine: VertexEngine, a: State, b: State, modes: Sequence[int]) -> CheckReport:
    """Check (Da)_n b = -n a_{n-1} b."""
    report = CheckReport("derivation")
    derived = engine.dop(a)
    for n in modes:
        lhs = engine.state_mode(derived, n, b)
        rhs = engine.state_mode(a, n - 1, b).scale(scalar(-n))
        report.record(lhs == rhs, f"n={n}: ({a.format()}) on ({b.format()})")
    return report


def truncation_check(engine: VertexEngine, a: State, b: State, extra: int = 3) -> CheckReport:
    """
    Check that a_n b vanishes from the annihilation degree upward.

    Args:
        engine: Vertex engine
        a: Left state
        b: Right state
        extra: How far above the weight bound to scan

    Returns:
        CheckReport: One comparison per scanned mode
    """
    report = CheckReport("truncation")
    bound = engine.mode_bound(a, b)
    top = (a.max_weight_twice() + b.max_weight_twice() - 2) // 2 + extra
    for n in range(bound, max(top, bound) + 1):
        report.record(not engine.state_mode(a, n, b), f"a_{n} b != 0 above bound {bound}")
    if bound > 0:
        report.record(bool(engine.state_mode(a, bound - 1, b)), f"a_{bound - 1} b = 0 below bound")
    report.details["bound"] = bound
    return report


def weight_check(engine: VertexEngine, a: State, b: State, modes: Sequence[int]) -> CheckReport:
    """Check wt(a_n b) = wt(a) + wt(b) - n - 1 on homogeneous inputs."""
    report = CheckReport("weight")
    if not (a.is_homogeneous() and b.is_homogeneous()):
        raise ValueError("Weight check needs homogeneous states")
    for n in modes:
        result = engine.state_mode(a, n, b)
        if not result:
            report.record(True)
            continue
        expected = a.max_weight_twice() + b.max_weight_twice() - 2 * n - 2
        report.record(result.weights_twice() == [expected], f"n={n}: {result.weights_twice()} vs {expected}")
    return report


@lru_cache(maxsize=None)
def binomial_window(exponent: int, sign: int, depth: int) -> CoeffWindow:
    """
    Coefficients of (x1 + sign x2)^exponent expanded in nonnegative powers
    of x2, over x2-degrees 0..depth.

    A coefficient deeper than `depth` lies outside the window and so is
    never certified.
    """
    series = TruncSeries(KERNEL_VAR, {exponent: ONE}, exponent + 1, exponent)
    box = ((exponent - depth, exponent), (0, depth))
    return expand_two_var(series, EXPAND_IN_SECOND, box, sign=sign)


def kernel_coefficient(exponent: int, sign: int, depth: int, i: int) -> Optional[Scalar]:
    """Coefficient of x1^(exponent-i) x2^i, or None when uncertified."""
    window = binomial_window(exponent, sign, depth)
    cell = (exponent - i, i)
    if not window.is_valid(cell):
        return None
    value = window.get(cell)
    return ZERO if value is None else value


def _kernel_sum(
    exponent_of: Callable[[int], int],
    sign: int,
    depth: int,
    indices: Iterable[int],
    term: Callable[[int], State],
) -> Optional[State]:
    """
    sum_i c_i term(i) with c_i read from the kernel windows; None as soon
    as one needed coefficient is uncertified.
    """
    total = State()
    for i in indices:
        coeff = kernel_coefficient(exponent_of(i), sign, depth, i)
        if coeff is None:
            return None
        if coeff:
            total = total + term(i).scale(coeff)
    return total


def slocality_witness(
    engine: VertexEngine,
    u: State,
    v: State,
    targets: Sequence[State],
    radius: int,
    data: Optional[Braiding] = None,
    depth: Optional[int] = None,
) -> CheckReport:
    """
    Verify (x1 - x2)^k [Y(u,x1)Y(v,x2) - f Y(v,x2)Y(u,x1)] w = 0 on a window.

    For a generator u and a basis word v the braiding (k, f) is derived;
    otherwise it must be supplied.

    Args:
        engine: Vertex engine
        u: Left state
        v: Right state
        targets: States w the identity is applied to
        radius: Cells (m, n) range over [-radius, radius]^2
        data: Braiding data for non-generator inputs
        depth: x2-depth of the (x1 - x2)^k window; defaults to k

    Returns:
        CheckReport: One comparison per (w, cell); details carry k and f
    """
    if data is None:
        generator = leading_generator(u)
        if generator is None:
            raise ValueError("Braiding data must be supplied for a non-generator left state")
        data = braiding(engine, generator, _single_word(v))
    if depth is None:
        depth = data.k
    report = CheckReport("s-locality")
    report.details.update(data.to_dict())
    report.details["depth"] = depth
    for w in targets:
        for m, n in itertools.product(range(-radius, radius + 1), repeat=2):
            witness = f"cell ({m},{n}) on {w.format()}"
            total = _kernel_sum(
                lambda t: data.k,
                -1,
                depth,
                range(data.k + 1),
                lambda t: (
                    engine.state_mode(u, m + data.k - t, engine.state_mode(v, n + t, w))
                    - engine.state_mode(v, n + t, engine.state_mode(u, m + data.k - t, w)).scale(data.factor)
                ),
            )
            if total is None:
                report.record_inconclusive(witness)
                continue
            report.record(not total, witness)
    return report


def weak_assoc_check(
    engine: VertexEngine,
    u: State,
    v: State,
    w: State,
    radius: int,
    depth: Optional[int] = None,
) -> CheckReport:
    """
    Compare the coefficients of x0^r x2^s in
    (x0+x2)^l Y(u,x0+x2)Y(v,x2)w and (x0+x2)^l Y(Y(u,x0)v,x2)w.

    With l = L(u, w) the first side is sum_i binom(r+i, i)
    u_{l-r-1-i} v_{i-1-s} w and the second sum_{i=0}^{l} binom(l, i)
    (u_{l-i-r-1} v)_{i-s-1} w. Both binomials are read from windows of
    (x0 + x2)^N expanded in x2.

    Args:
        engine: Vertex engine
        u, v, w: States
        radius: Cells (r, s) range over [-radius, radius]^2
        depth: x2-depth of the binomial windows; defaults to the deepest
            term the annihilation bounds require

    Returns:
        CheckReport: One comparison per cell, inconclusive where a needed
        binomial lies outside the window
    """
    report = CheckReport("weak-associativity")
    l = engine.mode_bound(u, w)
    v_bound = engine.mode_bound(v, w)
    if depth is None:
        depth = max(l, v_bound + radius)
    report.details.update({"l": l, "depth": depth})
    for r, s in itertools.product(range(-radius, radius + 1), repeat=2):
        lhs = _kernel_sum(
            lambda i: r + i,
            1,
            depth,
            range(0, max(0, v_bound + s + 1)),
            lambda i: engine.state_mode(u, l - r - 1 - i, engine.state_mode(v, i - 1 - s, w)),
        )
        rhs = _kernel_sum(
            lambda i: l,
            1,
            depth,
            range(l + 1),
            lambda i: engine.state_mode(engine.state_mode(u, l - i - r - 1, v), i - s - 1, w),
        )
        if lhs is None or rhs is None:
            report.record_inconclusive(f"cell ({r},{s})")
            continue
        report.record(lhs == rhs, f"cell ({r},{s})")
    return report


def sjacobi_check(
    engine: VertexEngine,
    u: State,
    v: State,
    w: State,
    radius: int,
    depth: Optional[int] = None,
) -> CheckReport:
    """
    Verify the S-Jacobi identity coefficientwise for a generator state u.

    At the cell (m, p, q):
    sum_i binom(m,i)(-1)^i u_{p+m-i} v_{q+i} w
    - f (-1)^m sum_i binom(m,i)(-1)^i v_{q+m-i} u_{p+i} w
    = sum_i binom(p,i) (u_{m+i} v)_{p+q-i} w,
    with every infinite sum cut off where the annihilation degrees make it
    vanish. The delta-function coefficients come from windows of
    (x1 - x2)^m and (x1 + x2)^p expanded in the second variable.

    Args:
        engine: Vertex engine
        u: Generator state or the vacuum
        v: Basis-word state
        w: Any state
        radius: Cells range over [-radius, radius]^3
        depth: Second-variable depth of the delta windows; defaults to the
            deepest term the annihilation bounds require

    Returns:
        CheckReport: One comparison per cell, inconclusive where a needed
        coefficient lies outside the window
    """
    report = CheckReport("s-jacobi")
    generator = leading_generator(u)
    if generator is not None:
        factor = braiding(engine, generator, _single_word(v)).factor
    elif u == State.vacuum():
        factor = ONE
    else:
        raise ValueError("S-Jacobi check needs a generator state or the vacuum on the left")

    uv_bound = engine.mode_bound(u, v)
    uw_bound = engine.mode_bound(u, w)
    vw_bound = engine.mode_bound(v, w)
    if depth is None:
        depth = 2 * radius + max(uv_bound, uw_bound, vw_bound)
    report.details.update({"factor": format_scalar(factor), "depth": depth})

    cells = itertools.product(range(-radius, radius + 1), repeat=3)
    for m, p, q in cells:
        witness = f"cell ({m},{p},{q})"
        first_top = m if m >= 0 else max(-1, vw_bound - q - 1)
        first = _kernel_sum(
            lambda i: m,
            -1,
            depth,
            range(first_top + 1),
            lambda i: engine.state_mode(u, p + m - i, engine.state_mode(v, q + i, w)),
        )
        second_top = m if m >= 0 else max(-1, uw_bound - p - 1)
        second = _kernel_sum(
            lambda i: m,
            -1,
            depth,
            range(second_top + 1),
            lambda i: engine.state_mode(v, q + m - i, engine.state_mode(u, p + i, w)),
        )
        third_top = p if p >= 0 else max(-1, uv_bound - m - 1)
        third = _kernel_sum(
            lambda i: p,
            1,
            depth,
            range(third_top + 1),
            lambda i: engine.state_mode(engine.state_mode(u, m + i, v), p + q - i, w),
        )
        if first is None or second is None or third is None:
            report.record_inconclusive(witness)
            continue
        lhs = first - second.scale(factor * sign_power(m))
        report.record(lhs == third, witness)
    return report


def mode_product_check(engine: VertexEngine, u: State, v: State, w: State, p: int, q: int) -> CheckReport:
    """
    Compare u_p v_q w with sum_{i=0}^{M} sum_{j=0}^{l} binom(p-l, i)
    binom(l, j) (u_{p-l-i+j} v)_{q+l+i-j} w, where l = L(u, w) and
    M = max(0, L(v, w) - q - 1).
    """
    report = CheckReport("mode-product")
    l = engine.mode_bound(u, w)
    top = max(0, engine.mode_bound(v, w) - q - 1)
    lhs = engine.state_mode(u, p, engine.state_mode(v, q, w))
    rhs = linear_combination(
        (
            scalar(binom(p - l, i) * binom(l, j)),
            engine.state_mode(engine.state_mode(u, p - l - i + j, v), q + l + i - j, w),
        )
        for i in range(top + 1)
        for j in range(l + 1)
    )
    report.record(lhs == rhs, f"p={p}, q={q}: ({u.format()}) ({v.format()}) ({w.format()})")
    return report


def random_mode_product_check(
    engine: VertexEngine,
    basis: Sequence[Word],
    samples: int,
    seed: int = 0,
    modes: Tuple[int, int] = (-3, 2),
) -> CheckReport:
    """
    Run `mode_product_check` on random basis triples and modes, and also
    compare each generator action u_p w with the direct module action.
    """
    rng = random.Random(seed)
    report = CheckReport("mode-product-random")
    for _ in range(samples):
        u, v, w = (State.basis(rng.choice(basis)) for _ in range(3))
        p, q = rng.randint(*modes), rng.randint(*modes)
        report.merge(mode_product_check(engine, u, v, w, p, q))
        generator = leading_generator(u)
        if generator is not None:
            direct = engine.module.act(generator.with_mode(p), w)
            report.record(engine.state_mode(u, p, w) == direct, f"direct action p={p} on {w.format()}")
    return report


def generator_states(engine: VertexEngine) -> List[State]:
    """The states X_{i,-1}|0> and Y_{i,-1}|0> of every color."""
    states = []
    for word in engine.module.enumerate_basis("1/2"):
        if word:
            states.append(State.basis(word))
    return states

