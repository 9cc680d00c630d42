"""
Algebra Checks Module

This module provides the randomized and exhaustive property checks of the
rewriting system: confluence, associativity and PBW counts.
"""

import random
import itertools
import logging
from collections import Counter
from typing import List, Sequence, Tuple

from arith import ONE
from models.check import CheckReport
from .algebra import QAlgebra, recolor
from .spec import QSpec
from .words import AlgebraElement, Generator, KIND_X, KIND_Y, Word, format_word

logger = logging.getLogger(__name__)

CONFLUENCE_MODES = (-3, 3)


def random_word(rng: random.Random, l: int, max_length: int, modes: Tuple[int, int]) -> Word:
    """
    Draw a random word.

    Args:
        rng: Seeded generator
        l: Number of colors
        max_length: Longest word drawn
        modes: Inclusive mode range

    Returns:
        Word: A word of length 0..max_length
    """
    length = rng.randint(0, max_length)
    return tuple(
        Generator(rng.choice((KIND_X, KIND_Y)), rng.randint(1, l), rng.randint(*modes))
        for _ in range(length)
    )


def confluence_check(
    algebra: QAlgebra,
    samples: int,
    seed: int = 0,
    max_length: int = 6,
    modes: Tuple[int, int] = CONFLUENCE_MODES,
) -> CheckReport:
    """
    Compare direct reduction with reduction after one random adjacent rewrite.

    Any adjacent pair ab may be replaced by f ba + c; the normal form must not
    change.

    Args:
        algebra: Algebra under test
        samples: Number of random words
        seed: Random seed
        max_length: Longest word drawn
        modes: Inclusive mode range

    Returns:
        CheckReport: One comparison per word of length >= 2
    """
    rng = random.Random(seed)
    report = CheckReport("confluence")
    for _ in range(samples):
        word = random_word(rng, algebra.spec.l, max_length, modes)
        if len(word) < 2:
            continue
        position = rng.randrange(len(word) - 1)
        a, b = word[position], word[position + 1]
        swapped = word[:position] + (b, a) + word[position + 2:]
        shorter = word[:position] + word[position + 2:]
        pre_swapped = AlgebraElement.from_word(swapped, algebra.swap_factor(a, b))
        contact = algebra.contact(a, b)
        if contact:
            pre_swapped = pre_swapped + AlgebraElement.from_word(shorter, contact)
        direct = algebra.normal_form(AlgebraElement.from_word(word))
        report.record(algebra.normal_form(pre_swapped) == direct, format_word(word))
    logger.info(f"Confluence: {report.passed} passed, {report.failed} failed")
    return report


def associativity_check(
    algebra: QAlgebra,
    samples: int,
    seed: int = 0,
    max_length: int = 3,
    modes: Tuple[int, int] = CONFLUENCE_MODES,
) -> CheckReport:
    """Check (ab)c = a(bc) on random triples of words."""
    rng = random.Random(seed)
    report = CheckReport("associativity")
    for _ in range(samples):
        a, b, c = (
            AlgebraElement.from_word(random_word(rng, algebra.spec.l, max_length, modes))
            for _ in range(3)
        )
        left = algebra.multiply(algebra.multiply(a, b), c)
        right = algebra.multiply(a, algebra.multiply(b, c))
        report.record(left == right, f"({a.format()}) ({b.format()}) ({c.format()})")
    return report


def _normal_words(algebra: QAlgebra, alphabet: Sequence[Generator], max_len: int) -> List[Word]:
    found = []
    for length in range(max_len + 1):
        for word in itertools.product(alphabet, repeat=length):
            if algebra.reduce_word(word) == {word: ONE}:
                found.append(word)
    return found


def pbw_count_check(spec: QSpec, modes: Sequence[int] = (-1, 0), max_len: int = 3) -> CheckReport:
    """
    Check that normal words factor over colors.

    For every per-color length vector (n_1, ..., n_l) with total <= max_len,
    the number of normal words of A_Q equals the product of the numbers of
    normal words of length n_i in the one-color algebras.

    Args:
        spec: The (l, Q) data
        modes: Modes of the generator alphabet
        max_len: Total length bound

    Returns:
        CheckReport: One comparison per length vector
    """
    algebra = QAlgebra(spec)
    alphabet = [
        Generator(kind, color, mode)
        for color in spec.colors()
        for kind in (KIND_Y, KIND_X)
        for mode in modes
    ]
    counts = Counter()
    for word in _normal_words(algebra, alphabet, max_len):
        vector = [0] * spec.l
        for generator in word:
            vector[generator.color - 1] += 1
        counts[tuple(vector)] += 1

    per_color = []
    for color in spec.colors():
        single = QAlgebra(spec.single_color(color))
        single_alphabet = [g for g in alphabet if g.color == color]
        words = _normal_words(single, [recolor((g,), 1)[0] for g in single_alphabet], max_len)
        per_color.append(Counter(len(word) for word in words))

    report = CheckReport("pbw-count")
    for vector in itertools.product(range(max_len + 1), repeat=spec.l):
        if sum(vector) > max_len:
            continue
        expected = 1
        for color_counts, length in zip(per_color, vector):
            expected *= color_counts[length]
        report.record(counts[vector] == expected, f"lengths {vector}: {counts[vector]} vs {expected}")
    report.details["normal_words"] = sum(counts.values())
    return report
