"""
Vacuum Module Module

This module provides the vacuum module V_Q = A_Q / A_Q A_Q^+: the generator
action on normal-basis states, basis enumeration and graded dimensions.
"""

import logging
import itertools
from typing import Dict, List, Sequence

from arith import ONE, ZERO, HalfInt, Scalar, exact_rank, in_span
from models.check import CheckReport
from qalgebra import AlgebraElement, Generator, KIND_X, KIND_Y, QAlgebra, QSpec, Word
from .state import State, format_basis_word, word_weight_twice

logger = logging.getLogger(__name__)

Terms = Dict[Word, Scalar]


class VacuumModule:
    """
    The left A_Q-module generated by the vacuum, annihilated by every
    nonnegative mode.
    """

    def __init__(self, spec: QSpec, algebra: QAlgebra = None):
        """
        Initialize the module.

        Args:
            spec: The (l, Q) data
            algebra: Existing algebra to share its normal-form cache
        """
        self.spec = spec
        self.algebra = algebra or QAlgebra(spec)
        self._basis_cache: Dict[int, List[Word]] = {}
        self._act_cache: Dict[tuple, Terms] = {}

    def act_word(self, generator: Generator, word: Word) -> Terms:
        """
        Apply one generator to one basis word.

        A creation generator moves right past smaller letters, collecting
        swap factors; an annihilator passes every letter and leaves a
        contact term at each partner, dying at the vacuum.

        Args:
            generator: Generator to apply
            word: Normal creation word

        Returns:
            dict: Map normal word -> coefficient
        """
        key = (generator, word)
        cached = self._act_cache.get(key)
        if cached is None:
            cached = self._act_word(generator, word)
            self._act_cache[key] = cached
        return cached

    def _act_word(self, generator: Generator, word: Word) -> Terms:
        algebra = self.algebra
        if generator.mode >= 0:
            result: Terms = {}
            factor = ONE
            for index, letter in enumerate(word):
                contact = algebra.contact(generator, letter)
                if contact:
                    shorter = word[:index] + word[index + 1:]
                    result[shorter] = result.get(shorter, ZERO) + factor * contact
                factor = factor * algebra.swap_factor(generator, letter)
            return {w: c for w, c in result.items() if c}

        factor = ONE
        key = generator.sort_key()
        index = 0
        while index < len(word):
            letter = word[index]
            if letter == generator and self.spec.is_fermionic(generator.color):
                return {}
            if letter.sort_key() >= key:
                break
            factor = factor * algebra.swap_factor(generator, letter)
            index += 1
        return {word[:index] + (generator,) + word[index:]: factor}

    def act(self, generator: Generator, state: State) -> State:
        """
        Left multiplication by a generator followed by projection to V_Q.

        Args:
            generator: Generator X_{i,m} or Y_{i,m}
            state: Vector of V_Q

        Returns:
            State: The image vector
        """
        terms: Terms = {}
        for word, coeff in state.terms.items():
            for image, value in self.act_word(generator, word).items():
                terms[image] = terms.get(image, ZERO) + coeff * value
        return State(terms)

    def act_element(self, element: AlgebraElement, state: State) -> State:
        """Apply an algebra element, rightmost letter first."""
        total = State()
        for word, coeff in element.terms.items():
            image = state
            for generator in reversed(word):
                image = self.act(generator, image)
                if not image:
                    break
            total = total + image.scale(coeff)
        return total

    def act_via_algebra(self, generator: Generator, state: State) -> State:
        """
        The same action computed by full normal form in A_Q then dropping
        every word with a nonnegative mode.
        """
        terms: Terms = {}
        for word, coeff in state.terms.items():
            reduced = self.algebra.reduce_word((generator,) + word)
            for image, value in reduced.items():
                if any(letter.mode >= 0 for letter in image):
                    continue
                terms[image] = terms.get(image, ZERO) + coeff * value
        return State(terms)

    def creation_generators(self, max_twice_weight: int) -> List[Generator]:
        """All creation generators of twice-weight <= the bound, in canonical order."""
        generators = []
        for n in range(1, (max_twice_weight + 1) // 2 + 1):
            for color in self.spec.colors():
                for kind in (KIND_Y, KIND_X):
                    generators.append(Generator(kind, color, -n))
        return sorted(generators, key=Generator.sort_key)

    def enumerate_basis(self, max_weight) -> List[Word]:
        """
        All normal creation words of weight <= max_weight.

        Args:
            max_weight: HalfInt, int or "n/2" text

        Returns:
            list: Words ordered by weight, then canonically
        """
        limit = HalfInt.of(max_weight).twice_value
        if limit in self._basis_cache:
            return list(self._basis_cache[limit])
        candidates = self.creation_generators(limit)
        words: List[Word] = []

        def extend(prefix: Word, start: int, budget: int) -> None:
            words.append(prefix)
            for index in range(start, len(candidates)):
                generator = candidates[index]
                cost = generator.weight_twice()
                if cost > budget:
                    continue
                nxt = index + 1 if self.spec.is_fermionic(generator.color) else index
                extend(prefix + (generator,), nxt, budget - cost)

        if limit >= 0:
            extend((), 0, limit)
        words.sort(key=lambda w: (word_weight_twice(w), tuple(g.sort_key() for g in w)))
        self._basis_cache[limit] = words
        logger.debug(f"Enumerated {len(words)} basis words up to twice-weight {limit}")
        return list(words)

    def basis_of_weight(self, weight) -> List[Word]:
        """Basis words of exactly one weight."""
        twice = HalfInt.of(weight).twice_value
        return [w for w in self.enumerate_basis(HalfInt(twice)) if word_weight_twice(w) == twice]

    def graded_dim(self, weight) -> int:
        """Number of basis vectors of a given weight."""
        return len(self.basis_of_weight(weight))

    def relations_on_basis_check(self, max_weight, modes: Sequence[int] = (-2, -1, 0, 1)) -> CheckReport:
        """
        Check ab - f ba = c as operators on every basis vector up to a weight.

        Args:
            max_weight: Weight cutoff for the basis
            modes: Modes of the generators a, b

        Returns:
            CheckReport: One comparison per (a, b, basis vector)
        """
        report = CheckReport("relations-on-basis")
        generators = [
            Generator(kind, color, mode)
            for color in self.spec.colors()
            for kind in (KIND_X, KIND_Y)
            for mode in modes
        ]
        for word in self.enumerate_basis(max_weight):
            state = State.basis(word)
            for a, b in itertools.product(generators, repeat=2):
                lhs = self.act(a, self.act(b, state)) - self.act(b, self.act(a, state)).scale(
                    self.algebra.swap_factor(a, b)
                )
                rhs = state.scale(self.algebra.contact(a, b))
                report.record(lhs == rhs, f"{a} {b} on {format_basis_word(word)}")
        return report

    def action_routes_check(self, max_weight, modes: Sequence[int] = (-2, -1, 0, 1)) -> CheckReport:
        """Compare the direct action with rewrite-then-project on basis vectors."""
        report = CheckReport("action-routes")
        for word in self.enumerate_basis(max_weight):
            state = State.basis(word)
            for color in self.spec.colors():
                for kind in (KIND_X, KIND_Y):
                    for mode in modes:
                        generator = Generator(kind, color, mode)
                        report.record(
                            self.act(generator, state) == self.act_via_algebra(generator, state),
                            f"{generator} on {format_basis_word(word)}",
                        )
        return report

    def cyclicity_check(self, max_weight) -> CheckReport:
        """
        Rank evidence that the vacuum generates V_Q up to a weight.

        Grows a spanning set from the vacuum by applying every generator of
        modes -n..n-1 and keeping images not yet in the span; the final
        rank must equal the sum of graded dimensions.
        """
        limit = HalfInt.of(max_weight).twice_value
        reach = (limit + 1) // 2 + 1
        generators = [
            Generator(kind, color, mode)
            for color in self.spec.colors()
            for kind in (KIND_X, KIND_Y)
            for mode in range(-reach, reach)
        ]
        spanning: List[Dict[Word, Scalar]] = [State.vacuum().terms]
        frontier = [State.vacuum()]
        while frontier:
            next_frontier = []
            for state in frontier:
                for generator in generators:
                    image = self.act(generator, state)
                    if not image or image.max_weight_twice() > limit:
                        continue
                    if in_span(spanning, image.terms):
                        continue
                    spanning.append(image.terms)
                    next_frontier.append(image)
            frontier = next_frontier

        rank = exact_rank(spanning)
        expected = len(self.enumerate_basis(HalfInt(limit)))
        report = CheckReport("cyclicity")
        report.record(rank == expected, f"rank {rank} vs dimension {expected}")
        report.details["rank"] = rank
        logger.info(f"Cyclicity up to twice-weight {limit}: rank {rank}, dimension {expected}")
        return report


def enumerate_basis(spec: QSpec, max_weight) -> List[Word]:
    """Module-level shortcut for `VacuumModule.enumerate_basis`."""
    return VacuumModule(spec).enumerate_basis(max_weight)


def graded_dim(spec: QSpec, weight) -> int:
    """Module-level shortcut for `VacuumModule.graded_dim`."""
    return VacuumModule(spec).graded_dim(weight)
