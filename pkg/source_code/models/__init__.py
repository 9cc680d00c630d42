"""
Models Module

This module contains the data models for check results, configurations and
suite reports.
"""

from .check import CheckReport, PASS, FAIL, INCONCLUSIVE
from .report import Report, SuiteResult, EXIT_OK, EXIT_FAILED, EXIT_CONFIG

__all__ = [
    'CheckReport',
    'PASS',
    'FAIL',
    'INCONCLUSIVE',
    'Report',
    'SuiteResult',
    'EXIT_OK',
    'EXIT_FAILED',
    'EXIT_CONFIG',
]
