"""
Dressed Fields Module

This module provides the realization of the deformed algebra inside the
vacuum module of Q(0): a^(i)(x) = Y(u_i, x) Phi_i(x) and
b^(i)(x) = Y(v_i, x) Phi_i(x)^-1, with modes computed exactly from the
truncated series of Phi.
"""

import logging
from typing import Dict, Iterable, Optional, Tuple

from arith import ZERO, Scalar
from qalgebra import Generator, KIND_Y, Word
from utils.errors import InsufficientOrder
from vacuum import State, VacuumModule
from vertex import VertexEngine
from .pseudo import PseudoAutomorphism
from .spec import QSeriesSpec

logger = logging.getLogger(__name__)


class DressedModel:
    """
    Modes of the dressed fields a^(i) (kind X) and b^(i) (kind Y) acting on
    the vacuum module of Q(0).
    """

    def __init__(self, spec: QSeriesSpec, order: Optional[int] = None, auto_extend: bool = False):
        """
        Initialize the model.

        Args:
            spec: The deformed data
            order: Working order for Phi series, defaults to spec.order
            auto_extend: Opt in to raising the working order when a mode
                needs more coefficients; by default InsufficientOrder is
                raised with the minimal order
        """
        self.spec = spec
        self.constant = spec.constant_spec()
        self.module = VacuumModule(self.constant)
        self.engine = VertexEngine(self.constant, self.module)
        self.order = spec.order if order is None else order
        self.auto_extend = auto_extend
        self._phis: Dict[Tuple[int, bool], PseudoAutomorphism] = {}
        self._modes: Dict[Tuple[str, int, int, Word], Dict[Word, Scalar]] = {}

    def phi(self, color: int, inverse: bool = False) -> PseudoAutomorphism:
        """Phi_i or its inverse at the current working order."""
        key = (color, inverse)
        phi = self._phis.get(key)
        if phi is None or phi.order != self.order:
            phi = PseudoAutomorphism(self.engine, self.spec, color, inverse, self.order)
            self._phis[key] = phi
        return phi

    def ensure_order(self, required: int) -> None:
        """
        Make sure Phi series are certified below `required`.

        Raises:
            InsufficientOrder: If the order is too low and auto extension is off
        """
        if required <= self.order:
            return
        if not self.auto_extend:
            raise InsufficientOrder(required, self.order)
        logger.warning(f"Extending the working order from {self.order} to {required}")
        self.order = required
        self._phis.clear()

    def _word_mode(self, kind: str, color: int, mode: int, word: Word) -> Dict[Word, Scalar]:
        key = (kind, color, mode, word)
        cached = self._modes.get(key)
        if cached is not None:
            return cached
        generator = Generator(kind, color, mode)
        # Phi never raises weight, so no e beyond this reach contributes
        reach = (State.basis(word).max_weight_twice() + 1) // 2 - mode
        self.ensure_order(reach)
        phi = self.phi(color, inverse=kind == KIND_Y)
        terms: Dict[Word, Scalar] = {}
        for image, series in phi.apply_word(word).items():
            top = self.engine.generator_bound(generator, image) - mode
            for e in range(max(0, top)):
                coeff = series.coefficient(e)
                if not coeff:
                    continue
                for result, value in self.module.act_word(generator.with_mode(mode + e), image).items():
                    terms[result] = terms.get(result, ZERO) + coeff * value
        terms = {w: c for w, c in terms.items() if c}
        self._modes[key] = terms
        return terms

    def dressed_mode(self, color: int, kind: str, mode: int, state: State) -> State:
        """
        The mode a^(i)_m (kind X) or b^(i)_m (kind Y) applied to a state:
        sum_e [x^e] Phi_i(x)^(+-1) w, then g_{m+e}.

        Args:
            color: The color i
            kind: KIND_X for a, KIND_Y for b
            mode: The mode m
            state: Target state

        Returns:
            State: The exact image
        """
        terms: Dict[Word, Scalar] = {}
        for word, coeff in state.terms.items():
            for result, value in self._word_mode(kind, color, mode, word).items():
                terms[result] = terms.get(result, ZERO) + coeff * value
        return State(terms)

    def dressed_bound(self, color: int, kind: str, state: State) -> int:
        """
        1 + the largest m with a dressed m-th mode nonzero on the state,
        clamped at 0. Scans downward from the weight bound.
        """
        if not state:
            return 0
        top = (state.max_weight_twice() + 1) // 2 - 1
        for mode in range(top, -1, -1):
            if self.dressed_mode(color, kind, mode, state):
                return mode + 1
        return 0

    def dressed_word(self, letters: Iterable[Generator]) -> State:
        """
        The dressed sequence z_1 z_2 ... z_r |0>, applied right to left, where
        each letter (kind, color, mode) names a^(color)_mode or b^(color)_mode.
        """
        state = State.vacuum()
        for letter in reversed(tuple(letters)):
            state = self.dressed_mode(letter.color, letter.kind, letter.mode, state)
            if not state:
                break
        return state
