"""
Check Report Model Module

This module provides the result record returned by every verification
operation.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"

MAX_WITNESSES = 20


@dataclass
class CheckReport:
    """
    Counts and witnesses of one verification run.
    """

    name: str
    passed: int = 0
    failed: int = 0
    inconclusive: int = 0
    failures: List[str] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        """Worst outcome: fail, then inconclusive, then pass."""
        if self.failed:
            return FAIL
        if self.inconclusive:
            return INCONCLUSIVE
        return PASS

    @property
    def ok(self) -> bool:
        """True when nothing failed and nothing was left uncertified."""
        return self.status == PASS

    def record(self, success: bool, witness: str = "") -> bool:
        """
        Record one comparison.

        Args:
            success: Whether the identity held
            witness: Description of the failing case

        Returns:
            bool: The success flag, for chaining
        """
        if success:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < MAX_WITNESSES:
                self.failures.append(witness)
            logger.debug(f"{self.name}: failure {witness}")
        return success

    def record_inconclusive(self, witness: str = "") -> None:
        """Record one comparison that could not be certified."""
        self.inconclusive += 1
        logger.debug(f"{self.name}: inconclusive {witness}")

    def merge(self, other: "CheckReport") -> "CheckReport":
        """Add the counts and witnesses of another report into this one."""
        self.passed += other.passed
        self.failed += other.failed
        self.inconclusive += other.inconclusive
        room = MAX_WITNESSES - len(self.failures)
        self.failures.extend(f"{other.name}: {w}" for w in other.failures[:max(room, 0)])
        return self

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to plain JSON-compatible data."""
        return {
            "name": self.name,
            "status": self.status,
            "passed": self.passed,
            "failed": self.failed,
            "inconclusive": self.inconclusive,
            "failures": list(self.failures),
            "details": self.details,
        }
