"""
Vertex Engine Module

This module provides the state-field map of V_Q: the modes a_n b for
arbitrary states, computed from the generator fields by the iterate
expansion, together with annihilation bounds and the translation operator.
"""

import logging
from typing import Dict, Optional, Tuple

from arith import ONE, ZERO, Scalar, binom, sign_power
from qalgebra import Generator, QSpec, Word
from vacuum import State, VacuumModule, word_weight_twice

logger = logging.getLogger(__name__)

Terms = Dict[Word, Scalar]


class VertexEngine:
    """
    Modes of the vertex operators Y(a, x) = sum_n a_n x^(-n-1) on V_Q.

    A normal word a = g_m a' is expanded as (u_m a')_n with u = g_{-1}|0>,
    using the annihilation degree of u against b as the associativity
    bound l and the annihilation degree of u against a' for k.
    """

    def __init__(self, spec: QSpec, module: Optional[VacuumModule] = None):
        """
        Initialize the engine.

        Args:
            spec: The (l, Q) data
            module: Existing vacuum module to share its caches
        """
        self.spec = spec
        self.module = module or VacuumModule(spec)
        self.algebra = self.module.algebra
        self._memo: Dict[Tuple[Word, int, Word], Terms] = {}

    def generator_bound(self, generator: Generator, word: Word) -> int:
        """
        Annihilation degree of the generator field of `generator` on a word.

        Returns 1 + the largest p with g_p word != 0, clamped at 0: only
        contact partners Z_{i,-1-p} allow p >= 0.
        """
        bound = 0
        for letter in word:
            if letter.color == generator.color and letter.kind != generator.kind:
                bound = max(bound, -letter.mode)
        return bound

    def _act(self, generator: Generator, terms: Terms, factor: Scalar, into: Terms) -> None:
        act_word = self.module.act_word
        for word, coeff in terms.items():
            for image, value in act_word(generator, word).items():
                into[image] = into.get(image, ZERO) + factor * coeff * value

    def word_mode(self, a: Word, n: int, b: Word) -> Terms:
        """
        The n-th mode of the basis vector a applied to the basis vector b.

        Args:
            a: Normal creation word (the state a|0>)
            n: Mode index
            b: Normal creation word

        Returns:
            dict: Map normal word -> coefficient
        """
        key = (a, n, b)
        cached = self._memo.get(key)
        if cached is not None:
            return cached

        result: Terms = {}
        if not a:
            if n == -1:
                result = {b: ONE}
        elif word_weight_twice(a) + word_weight_twice(b) - 2 * n - 2 < 0:
            result = {}
        else:
            generator = a[0]
            m = generator.mode
            rest = a[1:]
            if not rest:
                # g_{-k-1}|0> is the k-th divided derivative of the generator field
                k = -m - 1
                factor = binom(n, k) * sign_power(k)
                if factor:
                    self._act(generator.with_mode(n - k), {b: ONE}, ONE * factor, result)
            else:
                self._iterate(generator, rest, n, b, result)
            result = {w: c for w, c in result.items() if c}

        self._memo[key] = result
        return result

    def _iterate(self, generator: Generator, rest: Word, n: int, b: Word, result: Terms) -> None:
        m = generator.mode
        l = self.generator_bound(generator, b)
        k = max(0, self.generator_bound(generator, rest) - m)
        rest_twice = word_weight_twice(rest)
        b_twice = word_weight_twice(b)
        for i in range(k + 1):
            outer = binom(-l, i)
            if not outer:
                continue
            top = (rest_twice + b_twice - 2) // 2 - n + l + i
            if m + i >= 0:
                top = min(top, m + i)
            for j in range(top + 1):
                coeff = outer * binom(m + i, j) * sign_power(j)
                if not coeff:
                    continue
                inner = self.word_mode(rest, n - l - i + j, b)
                if inner:
                    self._act(generator.with_mode(m + l + i - j), inner, ONE * coeff, result)

    def state_mode(self, a: State, n: int, b: State) -> State:
        """
        The mode a_n b, bilinear in a and b.

        Args:
            a: Left state
            n: Mode index
            b: Right state

        Returns:
            State: a_n b
        """
        terms: Terms = {}
        for a_word, a_coeff in a.terms.items():
            for b_word, b_coeff in b.terms.items():
                factor = a_coeff * b_coeff
                for word, value in self.word_mode(a_word, n, b_word).items():
                    terms[word] = terms.get(word, ZERO) + factor * value
        return State(terms)

    def mode_bound(self, a: State, b: State) -> int:
        """
        Annihilation degree L(a, b) = 1 + max{p : a_p b != 0}, clamped at 0.

        Scans downward from the weight bound.
        """
        if not a or not b:
            return 0
        top = (a.max_weight_twice() + b.max_weight_twice() - 2) // 2
        for p in range(top, -1, -1):
            if self.state_mode(a, p, b):
                return p + 1
        return 0

    def dop(self, v: State) -> State:
        """The translation operator D(v) = v_{-2}|0>."""
        return self.state_mode(v, -2, State.vacuum())


def state_mode(a: State, n: int, b: State, spec: QSpec) -> State:
    """Module-level shortcut for `VertexEngine.state_mode`."""
    return VertexEngine(spec).state_mode(a, n, b)


def dop(v: State, spec: QSpec) -> State:
    """Module-level shortcut for `VertexEngine.dop`."""
    return VertexEngine(spec).dop(v)
