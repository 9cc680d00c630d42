"""
Tests for the Q-algebra: normal forms, skew validation, the grading
cocycle, the twisted tensor model and the smash relations.
"""

import random

import pytest

from arith import IMAG_UNIT, ONE, scalar
from qalgebra import (
    AlgebraElement,
    QAlgebra,
    QSpec,
    X,
    Y,
    associativity_check,
    confluence_check,
    epsilon,
    is_canonical,
    normal_form,
    parse_word,
    pbw_count_check,
    sigma_q,
    smash_relation_check,
    twist_check,
    validate_q,
)
from qalgebra.checks import random_word
from utils.errors import InvalidParameter, ParseError, SkewViolation
from vacuum import word_weight_twice


@pytest.mark.parametrize("preset, word, expected", [
    ("clifford", "X[1,0] Y[1,-1]", "- Y[1,-1] X[1,0] + 1"),
    ("weyl", "X[1,0] Y[1,-1]", "Y[1,-1] X[1,0] + 1"),
    ("clifford", "X[1,-1] X[1,-1]", "0"),
    ("weyl", "X[1,-1] X[1,-1]", "X[1,-1] X[1,-1]"),
    ("clifford", "Y[1,0] X[1,-1]", "- X[1,-1] Y[1,0] + 1"),
    ("weyl", "Y[1,0] X[1,-1]", "X[1,-1] Y[1,0] - 1"),
    ("clifford", "X[1,2] Y[1,-1]", "- Y[1,-1] X[1,2]"),
])
def test_normal_form_examples(preset_spec, preset, word, expected):
    spec = preset_spec(preset)
    assert normal_form(AlgebraElement.parse(word), spec).format() == expected


def test_mixed_colors_pick_up_q_entries(mixed_spec):
    result = normal_form(AlgebraElement.parse("X[2,-1] X[1,-1]"), mixed_spec)
    assert result.terms == {(X(1, -1), X(2, -1)): -IMAG_UNIT}
    result = normal_form(AlgebraElement.parse("Y[2,-1] X[1,-1]"), mixed_spec)
    assert result.terms == {(X(1, -1), Y(2, -1)): IMAG_UNIT}


def test_negative_modes_precede_nonnegative(clifford_spec):
    result = normal_form(AlgebraElement.parse("Y[1,1] X[1,-3]"), clifford_spec)
    assert list(result.terms) == [(X(1, -3), Y(1, 1))]


def test_reduced_words_are_canonical(mixed_spec):
    algebra = QAlgebra(mixed_spec)
    rng = random.Random(7)
    for _ in range(40):
        word = random_word(rng, mixed_spec.l, 6, (-3, 3))
        for reduced in algebra.reduce_word(word):
            assert is_canonical(reduced)


@pytest.mark.parametrize("preset", ["clifford", "weyl", "mixed"])
@pytest.mark.parametrize("seed", range(3))
def test_normal_form_is_idempotent_and_keeps_grades(preset_spec, preset, seed):
    spec = preset_spec(preset)
    algebra = QAlgebra(spec)
    rng = random.Random(seed)
    for _ in range(15):
        word = random_word(rng, spec.l, 5, (-2, 2))
        reduced = algebra.normal_form(AlgebraElement.from_word(word))
        assert algebra.normal_form(reduced) == reduced
        for result in reduced.terms:
            assert algebra.grade(result) == algebra.grade(word)
            assert word_weight_twice(result) == word_weight_twice(word)


@pytest.mark.parametrize("seed", range(4))
def test_sigma_q_composes_multiplicatively(seed):
    rng = random.Random(seed)
    element = AlgebraElement()
    for _ in range(4):
        element = element + AlgebraElement.from_word(random_word(rng, 2, 4, (-2, 2)), scalar(rng.randint(1, 3)))
    first = [scalar(2), IMAG_UNIT]
    second = [scalar(1, 1), scalar(-3)]
    combined = [a * b for a, b in zip(first, second)]
    assert sigma_q(sigma_q(element, first), second) == sigma_q(element, combined)
    assert sigma_q(element, [ONE, ONE]) == element


@pytest.mark.parametrize("rows", [
    [["2"]],
    [["1", "2"], ["1", "1"]],
    [["1", "i"], ["i", "-1"]],
    [["i"]],
])
def test_validate_q_rejects_non_skew(rows):
    with pytest.raises(SkewViolation):
        validate_q(QSpec.from_rows(rows))


def test_validate_reports_the_offending_pair():
    is_valid, message = QSpec.from_rows([["1", "2"], ["1", "1"]]).validate()
    assert not is_valid
    assert "2" in message


@pytest.mark.parametrize("text", ["X[0,1]", "Z[1,1]", "X[1]", "X[a,1]"])
def test_parse_word_rejects_bad_tokens(text):
    with pytest.raises(ParseError):
        parse_word(text)


def test_colors_are_checked_against_the_spec(clifford_spec):
    with pytest.raises(ParseError):
        AlgebraElement.parse("X[2,0] X[1,0]", clifford_spec.l)
    element = AlgebraElement.parse("X[2,0] X[1,0]")
    with pytest.raises(InvalidParameter):
        normal_form(element, clifford_spec)


def test_parse_word_accepts_unit():
    assert parse_word("1") == ()
    assert parse_word(" X[1, -2]  Y[2,0] ") == (X(1, -2), Y(2, 0))


@pytest.mark.parametrize("preset", ["weyl", "clifford", "mixed"])
def test_confluence_and_associativity(preset_spec, preset):
    algebra = QAlgebra(preset_spec(preset))
    confluence = confluence_check(algebra, samples=40, seed=3)
    assert confluence.ok, confluence.failures
    associativity = associativity_check(algebra, samples=20, seed=3)
    assert associativity.ok, associativity.failures


@pytest.mark.parametrize("preset", ["clifford", "mixed"])
def test_pbw_counts_factor_over_colors(preset_spec, preset):
    report = pbw_count_check(preset_spec(preset), max_len=3)
    assert report.ok, report.failures


def test_epsilon_cocycle(mixed_spec):
    assert epsilon((1, 0), (0, 1), mixed_spec) == ONE
    assert epsilon((0, 1), (1, 0), mixed_spec) == -IMAG_UNIT
    assert epsilon((0, 2), (1, 0), mixed_spec) == -ONE
    assert epsilon((0, -1), (1, 0), mixed_spec) == IMAG_UNIT


def test_twist_model_matches_algebra(mixed_spec):
    report = twist_check(mixed_spec, 4)
    assert report.ok, report.failures
    assert report.passed > 0


def test_twist_model_detects_wrong_cocycle(mixed_spec):
    wrong = QSpec.from_rows([["1", "-i"], ["i", "-1"]])
    report = twist_check(mixed_spec, 2, epsilon_override=wrong)
    assert report.failed > 0


def test_smash_relations(mixed_spec):
    assert smash_relation_check(mixed_spec).ok


def test_smash_relations_detect_wrong_factors(mixed_spec):
    wrong = QSpec.from_rows([["1", "-i"], ["i", "-1"]])
    assert smash_relation_check(mixed_spec, relation_q=wrong).failed > 0


def test_smash_relations_need_two_colors(clifford_spec):
    with pytest.raises(InvalidParameter):
        smash_relation_check(clifford_spec)


def test_sigma_q_scales_by_color_and_kind():
    element = AlgebraElement.from_word((X(1, -1), Y(1, 0), X(2, -1)))
    image = sigma_q(element, [scalar(2), scalar(3)])
    assert image.terms[(X(1, -1), Y(1, 0), X(2, -1))] == scalar(3)
    with pytest.raises(InvalidParameter):
        sigma_q(element, [scalar(0)])


def test_sigma_q_is_an_algebra_automorphism(mixed_spec):
    algebra = QAlgebra(mixed_spec)
    qvec = [scalar(2), IMAG_UNIT]
    a = AlgebraElement.parse("X[1,0] Y[2,-1]")
    b = AlgebraElement.parse("Y[1,-1] X[2,0]")
    lhs = sigma_q(algebra.multiply(a, b), qvec)
    rhs = algebra.multiply(sigma_q(a, qvec), sigma_q(b, qvec))
    assert lhs == rhs


@pytest.mark.slow
@pytest.mark.parametrize("preset", ["clifford", "mixed"])
def test_confluence_at_full_scale(preset_spec, preset):
    algebra = QAlgebra(preset_spec(preset))
    confluence = confluence_check(algebra, samples=500, seed=11, max_length=6, modes=(-3, 3))
    assert confluence.ok, confluence.failures
    associativity = associativity_check(algebra, samples=200, seed=11)
    assert associativity.ok, associativity.failures
