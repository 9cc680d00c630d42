"""
Conformal Module

This module provides the conformal vector of V_Q and the verification of the
Virasoro relations of its modes L(n) = omega_{n+1}.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from arith import HALF, ZERO, HalfInt, Scalar, format_scalar, scalar
from models.check import CheckReport
from qalgebra import Generator, KIND_X, KIND_Y, QSpec
from utils.errors import InconsistentCentralCharge, InvalidParameter
from vacuum import State
from .engine import VertexEngine

logger = logging.getLogger(__name__)


@dataclass
class VirasoroReport:
    """
    Outcome of the Virasoro verification.
    """

    central_charge: Scalar
    expected_charge: Scalar
    checked_pairs: List[Tuple[int, int]] = field(default_factory=list)
    max_weight: HalfInt = HALF
    checks: CheckReport = field(default_factory=lambda: CheckReport("virasoro"))

    @property
    def passed(self) -> bool:
        """True when every bracket, L(-1), L(0) and central-charge check held."""
        return self.checks.ok

    def to_check_report(self) -> CheckReport:
        """The underlying report with the headline values in its details."""
        self.checks.details.update({
            "central_charge": format_scalar(self.central_charge),
            "expected_central_charge": format_scalar(self.expected_charge),
            "checked_pairs": len(self.checked_pairs),
            "max_weight": str(self.max_weight),
        })
        return self.checks


def conformal_vector(spec: QSpec, engine: Optional[VertexEngine] = None) -> State:
    """
    omega = 1/2 sum_i (Y_{i,-2} X_{i,-1}|0> - q_ii X_{i,-2} Y_{i,-1}|0>).

    Args:
        spec: The (l, Q) data
        engine: Engine whose module performs the actions

    Returns:
        State: The conformal vector in normal form
    """
    module = (engine or VertexEngine(spec)).module
    half = scalar((1, 2))
    omega = State()
    for color in spec.colors():
        x_state = State.basis((Generator(KIND_X, color, -1),))
        y_state = State.basis((Generator(KIND_Y, color, -1),))
        first = module.act(Generator(KIND_Y, color, -2), x_state)
        second = module.act(Generator(KIND_X, color, -2), y_state)
        omega = omega + (first - second.scale(spec.entry(color, color))).scale(half)
    return omega


def expected_central_charge(spec: QSpec) -> Scalar:
    """-(q_11 + ... + q_ll)."""
    total = ZERO
    for color in spec.colors():
        total = total + spec.entry(color, color)
    return -total


class VirasoroOperators:
    """
    The modes L(n) = omega_{n+1} on V_Q.
    """

    def __init__(self, engine: VertexEngine):
        self.engine = engine
        self.omega = conformal_vector(engine.spec, engine)

    def apply(self, n: int, state: State) -> State:
        """L(n) applied to a state."""
        return self.engine.state_mode(self.omega, n + 1, state)

    def bracket(self, m: int, n: int, state: State) -> State:
        """[L(m), L(n)] applied to a state."""
        return self.apply(m, self.apply(n, state)) - self.apply(n, self.apply(m, state))

    def anomaly(self, m: int) -> Scalar:
        """
        The central charge read off [L(m), L(-m)]|0> = (m^3 - m)/12 c |0>.

        Raises:
            InconsistentCentralCharge: If the bracket is not a multiple of |0>
        """
        vacuum = State.vacuum()
        value = self.bracket(m, -m, vacuum) - self.apply(0, vacuum).scale(scalar(2 * m))
        if set(value.terms) - {()}:
            raise InconsistentCentralCharge([f"[L({m}),L({-m})]|0> = {value.format()}"])
        return value.coefficient(()) * scalar(12) / scalar(m ** 3 - m)


def virasoro_check(
    spec: QSpec,
    mode_radius: int,
    max_weight,
    engine: Optional[VertexEngine] = None,
) -> VirasoroReport:
    """
    Verify the Virasoro relations of L(n) = omega_{n+1}.

    Extracts c from [L(m), L(-m)]|0> for 2 <= m <= mode_radius, then checks
    [L(m), L(n)] = (m - n) L(m + n) + (m^3 - m)/12 delta_{m+n,0} c on every
    basis state of weight <= max_weight, L(-1) = D, L(0) = weight, and
    [L(-1), v_n] = -n v_{n-1} for the generator states.

    Args:
        spec: The (l, Q) data
        mode_radius: Bound on |m| and |n|, at least 2
        max_weight: Weight cutoff for the basis
        engine: Engine to reuse

    Returns:
        VirasoroReport: Central charge and per-identity outcomes

    Raises:
        InvalidParameter: If mode_radius < 2
        InconsistentCentralCharge: If the anomalies disagree
    """
    if mode_radius < 2:
        raise InvalidParameter(f"mode_radius must be at least 2, got {mode_radius}")
    engine = engine or VertexEngine(spec)
    operators = VirasoroOperators(engine)
    weight = HalfInt.of(max_weight)

    anomalies = [operators.anomaly(m) for m in range(2, mode_radius + 1)]
    if any(value != anomalies[0] for value in anomalies):
        raise InconsistentCentralCharge([format_scalar(value) for value in anomalies])
    charge = anomalies[0]
    expected = expected_central_charge(spec)
    logger.info(f"Central charge {format_scalar(charge)} (expected {format_scalar(expected)})")
    if charge != scalar(spec.l):
        logger.warning(
            f"Central charge {format_scalar(charge)} differs from the rank {spec.l}; "
            f"the two agree only when every q_ii = -1"
        )

    report = VirasoroReport(charge, expected, max_weight=weight)
    checks = report.checks
    checks.record(charge == expected, f"central charge {format_scalar(charge)} vs {format_scalar(expected)}")

    basis = [State.basis(word) for word in engine.module.enumerate_basis(weight)]
    radius = range(-mode_radius, mode_radius + 1)
    for m, n in itertools.product(radius, repeat=2):
        report.checked_pairs.append((m, n))
        for state in basis:
            lhs = operators.bracket(m, n, state)
            rhs = operators.apply(m + n, state).scale(scalar(m - n))
            if m + n == 0:
                rhs = rhs + state.scale(charge * scalar(m ** 3 - m) / scalar(12))
            checks.record(lhs == rhs, f"[L({m}),L({n})] on {state.format()}")

    for state in basis:
        checks.record(operators.apply(-1, state) == engine.dop(state), f"L(-1) = D on {state.format()}")
        twice = state.max_weight_twice()
        checks.record(
            operators.apply(0, state) == state.scale(scalar((twice, 2))),
            f"L(0) on {state.format()}",
        )

    for generator_word in engine.module.enumerate_basis(HALF):
        if not generator_word:
            continue
        v = State.basis(generator_word)
        for state in basis:
            for n in radius:
                lhs = operators.apply(-1, engine.state_mode(v, n, state)) - engine.state_mode(
                    v, n, operators.apply(-1, state)
                )
                rhs = engine.state_mode(v, n - 1, state).scale(scalar(-n))
                checks.record(lhs == rhs, f"[L(-1), {v.format()}_{n}] on {state.format()}")

    logger.info(f"Virasoro check: {checks.passed} passed, {checks.failed} failed")
    return report

