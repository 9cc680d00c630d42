"""
QYB Module

This module contains the diagonal S-operator built from the deformed data
and its unitarity and quantum Yang-Baxter checks.
"""

from .operator import DiagonalS, TAG_A, TAG_B, build_S, format_tag, qybe_check, unitarity_check

__all__ = [
    'DiagonalS',
    'TAG_A',
    'TAG_B',
    'build_S',
    'format_tag',
    'qybe_check',
    'unitarity_check',
]
