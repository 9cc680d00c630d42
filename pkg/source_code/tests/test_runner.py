"""
Tests for the suite runner.
"""

import pytest

from models import INCONCLUSIVE, PASS
from models.config import Config
from suites import SuiteRunner, run_suites
from utils.errors import ConfigError


def make_config(**fields):
    data = {"max_weight": "1", "samples": 10, "box_radius": 2, "max_len": 2}
    data.update(fields)
    return Config(data)


def test_suites_run_in_request_order():
    config = make_config(preset="clifford", suites=["vacuum", "algebra"])
    report = SuiteRunner(config).run()
    assert [suite.name for suite in report.suites] == ["vacuum", "algebra"]
    assert report.status == PASS
    assert report.suites[0].details["graded_dims"] == {"0": 1, "1/2": 2, "1": 1}


def test_algebra_suite_includes_smash_relations_for_two_colors():
    report = run_suites(make_config(preset="mixed"), ["algebra"])
    names = [check.name for check in report.suites[0].checks]
    assert names == ["confluence", "associativity", "pbw-count", "twist", "smash-relations"]
    assert report.status == PASS


def test_vertex_and_virasoro_suites():
    report = run_suites(make_config(preset="clifford"), ["vertex", "virasoro"])
    assert report.status == PASS, report.to_dict()
    assert report.suites[1].details["central_charge"] == "1"


def test_deformed_suite_for_linear_family():
    report = run_suites(make_config(preset="zf-linear"), ["deformed"])
    assert report.status == PASS, report.to_dict()
    suite = report.suites[0]
    assert any(check.name == "zf-relations" for check in suite.checks)


def test_filtration_suite_adds_half_basis_when_requested():
    report = run_suites(make_config(preset="yangian-sl2", max_weight="1/2"), ["filtration"])
    suite = report.suites[0]
    assert [check.name for check in suite.checks] == ["gr-compare", "filtration-E", "half-basis"]
    assert suite.status == PASS, suite.to_dict()
    assert suite.details["gr_table"]


def test_low_order_stops_a_suite_as_inconclusive():
    report = run_suites(make_config(preset="zf-linear", order=2, max_weight="2"), ["filtration"])
    suite = report.suites[0]
    assert [check.name for check in suite.checks] == ["truncation-order"]
    assert suite.status == INCONCLUSIVE
    assert report.status == INCONCLUSIVE
    assert suite.details["required_order"] == 3


def test_ybe_suite_reports_entries():
    report = run_suites(make_config(preset="zf-linear"), ["ybe"])
    suite = report.suites[0]
    assert suite.status == PASS
    assert suite.details["entries"]["a1,a1"][:2] == ["-1", "2"]


def test_timings_are_recorded():
    report = run_suites(make_config(preset="weyl"), ["vacuum"])
    assert report.suites[0].wall_time is not None
    assert "wall_time" in report.to_dict(timings=True)["suites"][0]


def test_invalid_configuration_is_rejected():
    with pytest.raises(ConfigError):
        SuiteRunner(make_config(q=[["1", "1"]]))


def test_unknown_suite_is_rejected():
    runner = SuiteRunner(make_config(preset="weyl"))
    with pytest.raises(ConfigError):
        runner.run(["vacuum", "bogus"])
