"""
Tests for the vacuum module: action, basis enumeration, graded dimensions
and the character oracle.
"""

import pytest

from arith import HalfInt, ONE, scalar
from qalgebra import AlgebraElement, X, Y
from vacuum import State, VacuumModule, character_check, character_coefficients, graded_dim


def test_annihilators_kill_the_vacuum(clifford_spec):
    module = VacuumModule(clifford_spec)
    vacuum = State.vacuum()
    for generator in (X(1, 0), Y(1, 0), X(1, 3), Y(1, 1)):
        assert not module.act(generator, vacuum)


def test_contact_term_returns_the_vacuum(clifford_spec, weyl_spec):
    for spec in (clifford_spec, weyl_spec):
        module = VacuumModule(spec)
        state = module.act(Y(1, -1), State.vacuum())
        assert module.act(X(1, 0), state) == State.vacuum()


def test_fermionic_square_vanishes(clifford_spec):
    module = VacuumModule(clifford_spec)
    state = module.act(X(1, -1), State.vacuum())
    assert not module.act(X(1, -1), state)


def test_creation_reorders_with_swap_factor(clifford_spec):
    module = VacuumModule(clifford_spec)
    state = module.act(Y(1, -1), module.act(X(1, -1), State.vacuum()))
    assert state.terms == {(Y(1, -1), X(1, -1)): ONE}
    state = module.act(X(1, -1), module.act(Y(1, -1), State.vacuum()))
    assert state.terms == {(Y(1, -1), X(1, -1)): -ONE}


@pytest.mark.parametrize("preset, weight, dimension", [
    ("clifford", 0, 1),
    ("clifford", "1/2", 2),
    ("clifford", 1, 1),
    ("clifford", "3/2", 2),
    ("clifford", 2, 4),
    ("weyl", "1/2", 2),
    ("weyl", 1, 3),
    ("weyl", 2, 9),
    ("mixed", "1/2", 4),
    ("yangian-sl2", "1/2", 6),
])
def test_graded_dimensions(preset_spec, preset, weight, dimension):
    assert graded_dim(preset_spec(preset), weight) == dimension


def test_basis_is_ordered_by_weight(mixed_spec):
    module = VacuumModule(mixed_spec)
    words = module.enumerate_basis("3/2")
    assert words[0] == ()
    weights = [State.basis(word).max_weight_twice() for word in words]
    assert weights == sorted(weights)
    assert len(set(words)) == len(words)


def test_character_coefficients_match_products(clifford_spec, weyl_spec):
    assert character_coefficients(clifford_spec, 2) == [1, 2, 1, 2, 4]
    assert character_coefficients(weyl_spec, 2) == [1, 2, 3, 6, 9]
    assert character_coefficients(clifford_spec, HalfInt(-1)) == []


@pytest.mark.parametrize("preset, weight", [
    ("weyl", 3),
    ("clifford", 4),
    ("mixed", 2),
    ("yangian-sl2", "3/2"),
])
def test_character_check(preset_spec, preset, weight):
    report = character_check(VacuumModule(preset_spec(preset)), weight)
    assert report.ok, report.failures
    assert report.details["graded_dims"]["0"] == 1


@pytest.mark.parametrize("preset", ["weyl", "clifford", "mixed"])
def test_relations_hold_on_basis(preset_spec, preset):
    module = VacuumModule(preset_spec(preset))
    report = module.relations_on_basis_check(1)
    assert report.ok, report.failures


@pytest.mark.parametrize("preset", ["clifford", "mixed"])
def test_action_routes_agree(preset_spec, preset):
    module = VacuumModule(preset_spec(preset))
    report = module.action_routes_check("3/2")
    assert report.ok, report.failures


@pytest.mark.parametrize("preset, weight", [("clifford", 2), ("weyl", "3/2")])
def test_cyclicity(preset_spec, preset, weight):
    report = VacuumModule(preset_spec(preset)).cyclicity_check(weight)
    assert report.ok, report.failures
    assert report.details["rank"] == len(VacuumModule(preset_spec(preset)).enumerate_basis(weight))


def test_state_arithmetic():
    a = State.basis((X(1, -1),))
    b = State.basis((Y(1, -1),), scalar(2))
    total = a + b - a
    assert total == b
    assert not (a - a)
    assert (a + b).coefficient((Y(1, -1),)) == scalar(2)
    assert State.vacuum().format() == "|0>"
    assert a.format() == "X[1,-1] |0>"


def test_algebra_elements_act_through_their_normal_form(clifford_spec):
    module = VacuumModule(clifford_spec)
    word = (X(1, 0), Y(1, -1))
    raw = AlgebraElement({word: ONE})
    reduced = AlgebraElement(module.algebra.reduce_word(word))
    assert module.act_element(raw, State.vacuum()) == State.vacuum()
    assert module.act_element(reduced, State.vacuum()) == State.vacuum()
