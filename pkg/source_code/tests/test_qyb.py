"""
Tests for the diagonal S-operator: entries, unitarity and the quantum
Yang-Baxter equation.
"""

import pytest

from deformation import PRESETS, QSeriesSpec, load_preset
from qyb import TAG_A, TAG_B, build_S, qybe_check, unitarity_check


def test_entries_of_linear_family():
    operator = build_S(load_preset("zf-linear"))
    a1, b1 = (TAG_A, 1), (TAG_B, 1)
    assert operator.entry_for(a1, a1).format_coefficients()[:4] == ["-1", "2", "-2", "2"]
    assert operator.entry_for(b1, b1).format_coefficients()[:4] == ["-1", "2", "-2", "2"]
    assert operator.entry_for(a1, b1).format_coefficients()[:4] == ["-1", "-2", "-2", "-2"]
    assert operator.to_dict()["a1,b1"] == operator.entry_for(a1, b1).format_coefficients()


def test_tags_cover_both_kinds():
    operator = build_S(load_preset("yangian-sl2"))
    assert len(operator.tags()) == 6
    assert len(operator.to_dict()) == 36


def test_mixed_entries_use_the_transposed_q():
    operator = build_S(load_preset("mixed", order=3))
    assert operator.entry_for((TAG_A, 1), (TAG_A, 2)).format_coefficients() == ["-i", "0", "0"]
    assert operator.entry_for((TAG_A, 1), (TAG_B, 2)).format_coefficients() == ["i", "0", "0"]


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_unitarity_and_qybe_hold_for_presets(name):
    operator = build_S(load_preset(name))
    unitarity = unitarity_check(operator)
    assert unitarity.ok, unitarity.failures
    qybe = qybe_check(operator, radius=3)
    assert qybe.ok, qybe.failures
    assert qybe.details["uncertified_cells"] == 0


def test_qybe_on_a_box_beyond_the_order_is_partly_uncertified():
    operator = build_S(load_preset("zf-linear", order=3))
    report = qybe_check(operator, radius=3)
    assert report.failed == 0
    assert report.details["uncertified_cells"] > 0


def test_asymmetric_deformation_breaks_unitarity():
    spec = QSeriesSpec.from_strings(
        [["1", "1"], ["1", "1"]],
        [[["1"], ["1", "1"]], [["1"], ["1"]]],
    )
    report = unitarity_check(build_S(spec))
    assert report.failed > 0
