"""
Utils Module

This module contains file helpers and the exception hierarchy.
"""

from .file_io import (
    ensure_directory_exists,
    read_json_file,
    write_json_file,
    dump_json,
    write_text_file,
)
from .errors import (
    QvaError,
    ParseError,
    ConfigError,
    VariableMismatch,
    NotInvertible,
    InvalidParameter,
    SkewViolation,
    InsufficientOrder,
    InconsistentCentralCharge,
)

__all__ = [
    'ensure_directory_exists',
    'read_json_file',
    'write_json_file',
    'dump_json',
    'write_text_file',
    'QvaError',
    'ParseError',
    'ConfigError',
    'VariableMismatch',
    'NotInvertible',
    'InvalidParameter',
    'SkewViolation',
    'InsufficientOrder',
    'InconsistentCentralCharge',
]
