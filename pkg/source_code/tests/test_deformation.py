"""
Tests for the deformed family: series specs, presets, the pseudo
automorphisms Phi_i, dressed modes and the exchange relations.
"""

import pytest

from arith import ONE, ZERO, scalar
from deformation import (
    DressedModel,
    PRESETS,
    QSeriesSpec,
    build_qx,
    commutativity_check,
    format_series_state,
    inverse_check,
    load_preset,
    parse_polynomial,
    phi_apply,
    preset_data,
    preset_names,
    pseudo_law_check,
    zf_check_all,
    zf_relation_check,
)
from qalgebra import KIND_X, KIND_Y, X, Y
from utils.errors import ConfigError, InsufficientOrder, InvalidParameter
from vacuum import State


def asymmetric_spec():
    """Two bosonic colors with p_12 = 1 + x but p_21 = 1."""
    return QSeriesSpec.from_strings(
        [["1", "1"], ["1", "1"]],
        [[["1"], ["1", "1"]], [["1"], ["1"]]],
        order=8,
    )


def test_parse_polynomial_forms():
    assert parse_polynomial("1") == (ONE,)
    assert parse_polynomial(["1", "1", "0"]) == (ONE, ONE)
    assert parse_polynomial([1, -2]) == (ONE, scalar(-2))


def test_build_qx_of_linear_family():
    qx = build_qx(load_preset("zf-linear"))
    assert qx[0][0].format_coefficients() == ["-1", "2", "-2", "2", "-2", "2", "-2", "2"]


def test_build_qx_of_undeformed_family_is_constant():
    qx = build_qx(load_preset("mixed"), 4)
    assert qx[0][1].format_coefficients() == ["i", "0", "0", "0"]
    assert qx[1][1].format_coefficients() == ["-1", "0", "0", "0"]


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_presets_validate(name):
    spec = load_preset(name)
    assert spec.validate() == (True, "")
    assert spec.to_dict()["l"] == spec.l


def test_preset_names_and_unknown_preset():
    assert set(preset_names()) == {"weyl", "clifford", "mixed", "zf-linear", "yangian-sl2"}
    assert preset_data("yangian-sl2")["half_subalgebra"] is True
    with pytest.raises(ConfigError):
        preset_data("sl3")


@pytest.mark.parametrize("p_rows, order, fragment", [
    ([[["2", "1"]]], 8, "(0) must be 1"),
    ([[["1"], ["1", "1"]], [["1"], ["1"]]], 8, "p[1,2] != p[2,1]"),
    ([[["1"]]], 0, "order"),
])
def test_series_spec_validation(p_rows, order, fragment):
    size = len(p_rows)
    q_rows = [["1"] * size for _ in range(size)]
    is_valid, message = QSeriesSpec.from_strings(q_rows, p_rows, order).validate()
    assert not is_valid
    assert fragment in message


def test_phi_on_single_generators():
    spec = load_preset("zf-linear")
    image = phi_apply(spec, 1, State.basis((X(1, -1),)))
    assert image.coefficient_state(0) == State.basis((X(1, -1),))
    assert image.coefficient_state(1) == State.basis((X(1, -1),))
    assert not image.coefficient_state(2)

    image = phi_apply(spec, 1, State.basis((Y(1, -1),)))
    for degree in range(spec.order):
        coefficient = ONE if degree % 2 == 0 else -ONE
        assert image.coefficient_state(degree) == State.basis((Y(1, -1),), coefficient)


def test_phi_on_second_mode_picks_up_derivative():
    spec = load_preset("zf-linear")
    image = phi_apply(spec, 1, State.basis((X(1, -2),)))
    assert image.coefficient_state(0) == State.basis((X(1, -2),)) - State.basis((X(1, -1),))
    assert image.coefficient_state(1) == State.basis((X(1, -2),))
    assert not image.coefficient_state(2)
    table = format_series_state(image)
    assert table["X[1,-1] |0>"][:2] == ["-1", "0"]


def test_phi_fixes_the_vacuum():
    image = phi_apply(load_preset("yangian-sl2"), 2, State.vacuum(), inverse=True)
    assert image.coefficient_state(0) == State.vacuum()
    assert not image.coefficient_state(1)


def test_inverse_phi_swaps_symbols():
    spec = load_preset("zf-linear")
    image = phi_apply(spec, 1, State.basis((X(1, -1),)), inverse=True)
    assert image.coefficient_state(3) == State.basis((X(1, -1),), -ONE)


@pytest.mark.parametrize("preset", ["zf-linear", "yangian-sl2"])
def test_pseudo_law_and_inverse(preset):
    spec = load_preset(preset, order=5)
    model = DressedModel(spec)
    for color in range(1, spec.l + 1):
        for inverse in (False, True):
            report = pseudo_law_check(model.engine, spec, color, 1, inverse=inverse)
            assert report.ok, report.failures
        report = inverse_check(model.engine, spec, color, "3/2")
        assert report.ok, report.failures


def test_phi_operators_commute():
    spec = load_preset("yangian-sl2", order=4)
    model = DressedModel(spec)
    for i, j in ((1, 1), (1, 2), (1, 3), (2, 3)):
        report = commutativity_check(model.engine, spec, i, j, 1)
        assert report.ok, report.failures
        assert report.details["cells"] > 0


def test_undeformed_dressed_modes_are_plain_modes():
    model = DressedModel(load_preset("mixed"))
    for word in model.module.enumerate_basis(1):
        state = State.basis(word)
        for kind in (KIND_X, KIND_Y):
            for mode in (-2, -1, 0, 1):
                expected = model.module.act(X(2, mode) if kind == KIND_X else Y(2, mode), state)
                assert model.dressed_mode(2, kind, mode, state) == expected


def test_dressed_modes_of_linear_family(zf_linear_model):
    vacuum = State.vacuum()
    x_state = State.basis((X(1, -1),))
    assert zf_linear_model.dressed_mode(1, KIND_X, -1, vacuum) == x_state
    assert not zf_linear_model.dressed_mode(1, KIND_X, -1, x_state)
    assert zf_linear_model.dressed_mode(1, KIND_Y, 0, x_state) == vacuum
    assert zf_linear_model.dressed_word(()) == vacuum
    assert zf_linear_model.dressed_bound(1, KIND_Y, x_state) == 1
    assert zf_linear_model.dressed_bound(1, KIND_X, vacuum) == 0


def test_dressed_mode_enforces_the_order_by_default():
    model = DressedModel(load_preset("zf-linear", order=2))
    state = State.basis((X(1, -2), X(1, -1)))
    with pytest.raises(InsufficientOrder) as excinfo:
        model.dressed_mode(1, KIND_Y, -2, state)
    assert excinfo.value.required == 4
    assert excinfo.value.available == 2
    assert model.order == 2


def test_dressed_mode_extends_order_when_allowed():
    model = DressedModel(load_preset("zf-linear", order=2), auto_extend=True)
    model.dressed_mode(1, KIND_Y, -2, State.basis((X(1, -2), X(1, -1))))
    assert model.order == 4


def test_zf_relations_of_linear_family(zf_linear_model):
    report = zf_check_all(zf_linear_model, 3, 2)
    assert report.failed == 0, report.failures
    assert report.inconclusive == 0
    assert report.passed > 0
    assert report.details["braiding"]["11"][:3] == ["-1", "2", "-2"]


@pytest.mark.parametrize("preset", ["clifford", "mixed"])
def test_zf_relations_of_undeformed_families(preset):
    model = DressedModel(load_preset(preset))
    report = zf_check_all(model, 2, 1)
    assert report.ok, report.failures


def test_zf_relations_of_yangian_family():
    model = DressedModel(load_preset("yangian-sl2"))
    report = zf_check_all(model, 2, "1/2")
    assert report.ok, report.failures


def test_asymmetric_deformation_breaks_exchange_relation():
    model = DressedModel(asymmetric_spec())
    report = zf_relation_check(model, 1, 2, "aa", 2, 0)
    assert report.failed > 0


def test_contact_cell_of_ab_relation(zf_linear_model):
    vacuum = State.vacuum()
    report = zf_relation_check(zf_linear_model, 1, 1, "ab", 1, 0, targets=[vacuum])
    assert report.ok, report.failures
    assert report.passed == 9


@pytest.mark.parametrize("family, i, j", [("ba", 1, 1), ("aa", 2, 1), ("ab", 0, 1)])
def test_zf_relation_rejects_bad_arguments(zf_linear_model, family, i, j):
    with pytest.raises(InvalidParameter):
        zf_relation_check(zf_linear_model, i, j, family, 1, 0)
