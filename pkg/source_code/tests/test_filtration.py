"""
Tests for the filtrations: the dressed-sequence filtration F and its
associated graded table, the length filtration E, and the half basis.
"""

import pytest

from deformation import (
    DressedModel,
    FiltrationLevel,
    dressed_sequences,
    filtration_E_check,
    filtration_F,
    filtration_levels,
    gr_compare,
    half_basis_check,
    half_sequences,
    load_preset,
)
from deformation.filtration import constant_counts, mode_sum, nominal_twice
from qalgebra import KIND_X, KIND_Y, X, Y
from vacuum import State


def test_dressed_sequences_respect_the_weight_bound():
    sequences = dressed_sequences(1, 3)
    assert () in sequences
    assert all(nominal_twice(letters) <= 3 for letters in sequences)
    assert all(sum(1 for letter in letters if letter.mode >= 0) <= 1 for letters in sequences)
    assert (X(1, 0), X(1, -1), X(1, -1)) in sequences
    assert (X(1, 1), X(1, -1), X(1, -2)) in sequences
    creations_only = dressed_sequences(1, 3, annihilators=0)
    assert all(letter.mode < 0 for letters in creations_only for letter in letters)
    assert len(creations_only) < len(sequences)


def test_sequences_never_end_in_an_annihilator():
    for letters in dressed_sequences(2, 4, annihilators=2):
        if letters:
            assert letters[-1].mode < 0


def test_nominal_weight_and_mode_sum():
    letters = (X(1, 0), X(1, -2), Y(1, -1))
    assert nominal_twice(letters) == 3
    assert mode_sum(letters) == -3
    pairs = [s for s in dressed_sequences(1, 3, annihilators=0) if len(s) == 2]
    assert len(pairs) == 4
    assert {letter.kind for s in pairs for letter in s} == {KIND_X, KIND_Y}


def test_filtration_edges(zf_linear_model):
    empty = filtration_F(zf_linear_model, -1, 1)
    assert isinstance(empty, FiltrationLevel)
    assert empty.dimension == 0
    assert empty.dim(2) == 0
    assert not empty.contains(State.vacuum())

    vacuum = filtration_F(zf_linear_model, 0, 1)
    assert vacuum.dimension == 1
    assert vacuum.contains(State.vacuum())
    assert not vacuum.contains(State.basis((X(1, -1),)))

    level = filtration_F(zf_linear_model, 2, 1)
    assert level.dim(0) == 1
    assert level.dim(1) == 1 + 2
    assert level.dim(2) == 1 + 2 + 1
    assert level.dimension == 4


def test_first_level_contains_the_generator_states(zf_linear_model):
    level = filtration_F(zf_linear_model, 1, "1/2")
    assert level.contains(State.basis((X(1, -1),)))
    assert level.contains(State.basis((Y(1, -1),)))
    assert level.dimension == 3


def test_filtration_levels_increase(zf_linear_model):
    levels = filtration_levels(zf_linear_model, "3/2")
    assert [level.n for level in levels] == list(range(len(levels)))
    for lower, upper in zip(levels, levels[1:]):
        assert all(upper.contains(state) for state in lower.states)
        assert all(lower.dim(t) <= upper.dim(t) for t in range(4))


def test_annihilators_stay_within_the_level(zf_linear_model):
    for n in range(4):
        full = filtration_F(zf_linear_model, n, "3/2")
        creations = filtration_F(zf_linear_model, n, "3/2", annihilators=0)
        assert full.dims == creations.dims


def test_constant_counts_of_one_fermion(clifford_spec):
    counts = constant_counts(clifford_spec, 2)
    assert counts[(0, 0)] == 1
    assert counts[(1, 1)] == 2
    assert counts[(2, 2)] == 1
    assert counts[(3, 2)] == 2
    assert counts[(4, 3)] == 4
    assert (4, 2) not in counts


@pytest.mark.parametrize("preset, weight", [
    ("zf-linear", 2),
    ("clifford", "3/2"),
    ("mixed", 1),
])
def test_associated_graded_matches_constant_family(preset, weight):
    model = DressedModel(load_preset(preset))
    report = gr_compare(model, weight)
    assert report.ok, report.failures
    rows = report.details["table"]
    assert rows[0] == {"weight": "0", "degree": 0, "graded": 1, "expected": 1}
    assert all(row["graded"] == row["expected"] for row in rows)


@pytest.mark.parametrize("preset, weight", [("clifford", "3/2"), ("mixed", 1)])
def test_length_filtration(preset_spec, preset, weight):
    report = filtration_E_check(preset_spec(preset), weight, samples=20, seed=5)
    assert report.ok, report.failures
    ranks = report.details["ranks"]
    assert ranks[0] == 1
    assert ranks == sorted(ranks)


def test_half_sequences_of_one_fermion(clifford_spec):
    sequences = half_sequences(clifford_spec, 2)
    assert () in sequences
    assert all(letter.kind == KIND_X for letters in sequences for letter in letters)
    for letters in sequences:
        modes = [letter.mode for letter in letters]
        assert len(set(modes)) == len(modes)
    assert len(sequences) == 4


def test_half_basis_of_yangian_family():
    model = DressedModel(load_preset("yangian-sl2"))
    report = half_basis_check(model, 2)
    assert report.ok, report.failures
    assert report.details["table"][-1]["rank"] == report.details["table"][-1]["vectors"]


def test_half_basis_of_linear_family(zf_linear_model):
    report = half_basis_check(zf_linear_model, "5/2")
    assert report.ok, report.failures


@pytest.mark.slow
def test_associated_graded_of_linear_family_up_to_weight_three(zf_linear_model):
    report = gr_compare(zf_linear_model, 3)
    assert report.ok, report.failures
    rows = report.details["table"]
    assert any(row["weight"] == "3" for row in rows)
    assert all(row["graded"] == row["expected"] for row in rows)
