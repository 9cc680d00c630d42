"""
Report Model Module

This module provides the machine-readable report assembled from suite
results.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .check import CheckReport, FAIL, INCONCLUSIVE, PASS

logger = logging.getLogger(__name__)

REPORT_VERSION = "1.0"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2

_SEVERITY = {PASS: 0, INCONCLUSIVE: 1, FAIL: 2}


@dataclass
class SuiteResult:
    """
    Outcome of one suite: the check reports it ran and its wall time.
    """

    name: str
    checks: List[CheckReport] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)
    wall_time: Optional[float] = None

    @property
    def status(self) -> str:
        """Worst status among the checks."""
        worst = PASS
        for check in self.checks:
            if _SEVERITY[check.status] > _SEVERITY[worst]:
                worst = check.status
        return worst

    def add(self, check: CheckReport) -> CheckReport:
        """Append a check report and return it."""
        self.checks.append(check)
        logger.debug(f"{self.name}: {check.name} -> {check.status}")
        return check

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        data = {
            "name": self.name,
            "status": self.status,
            "checks": [check.to_dict() for check in self.checks],
            "details": self.details,
        }
        if timings and self.wall_time is not None:
            data["wall_time"] = round(self.wall_time, 3)
        return data


@dataclass
class Report:
    """
    The full run report: configuration echo plus suite results in request
    order.
    """

    config: Dict[str, Any] = field(default_factory=dict)
    suites: List[SuiteResult] = field(default_factory=list)

    @property
    def status(self) -> str:
        worst = PASS
        for suite in self.suites:
            if _SEVERITY[suite.status] > _SEVERITY[worst]:
                worst = suite.status
        return worst

    def exit_code(self) -> int:
        """0 when every suite passed, 1 otherwise."""
        return EXIT_OK if self.status == PASS else EXIT_FAILED

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        """Serialize to plain JSON-compatible data."""
        return {
            "version": REPORT_VERSION,
            "status": self.status,
            "config": self.config,
            "suites": [suite.to_dict(timings) for suite in self.suites],
        }
