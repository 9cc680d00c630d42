"""
Suites Module

This module provides the orchestration of the verification suites and the
assembly of their report.
"""

from .runner import SuiteRunner, run_suites

__all__ = ['SuiteRunner', 'run_suites']
