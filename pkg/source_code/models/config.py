"""
Config Model Module

This module provides the data model for verification run configurations.
"""

import copy
import logging
from typing import Any, Dict, List, Optional, Tuple

from utils.errors import ConfigError, ParseError, SkewViolation
from utils.file_io import read_json_file

logger = logging.getLogger(__name__)

SUITE_NAMES = ["algebra", "vacuum", "vertex", "virasoro", "deformed", "filtration", "ybe"]

DEFAULTS: Dict[str, Any] = {
    "l": None,
    "q": None,
    "p": None,
    "order": 8,
    "suites": list(SUITE_NAMES),
    "max_weight": "2",
    "mode_radius": 3,
    "box_radius": 3,
    "max_len": 3,
    "samples": 50,
    "seed": 0,
    "half_subalgebra": False,
    "report_path": None,
    "preset": None,
}

INTEGER_FIELDS = ("order", "mode_radius", "box_radius", "max_len", "samples", "seed")


class Config:
    """
    Data model for one verification run.
    """

    def __init__(self, data: Optional[Dict[str, Any]] = None):
        """
        Initialize a configuration.

        Args:
            data: Field values overriding the defaults
        """
        self.data = copy.deepcopy(DEFAULTS)
        if data:
            unknown = set(data) - set(DEFAULTS)
            if unknown:
                raise ConfigError(f"Unknown configuration fields: {', '.join(sorted(unknown))}")
            self.data.update(copy.deepcopy(data))
        if self.data.get("preset"):
            self.apply_preset(self.data["preset"])

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Config":
        """Build a configuration from plain JSON data."""
        if not isinstance(data, dict):
            raise ConfigError("Configuration must be a JSON object")
        return cls(data)

    @classmethod
    def from_file(cls, file_path: str) -> "Config":
        """
        Load a configuration from a JSON file.

        Raises:
            ConfigError: If the file cannot be read or parsed
        """
        data = read_json_file(file_path)
        if data is None:
            raise ConfigError(f"Could not read configuration file: {file_path}")
        return cls.from_dict(data)

    def set_value(self, key: str, value: Any) -> None:
        """
        Set a configuration value.

        Args:
            key: Field name
            value: Field value
        """
        if key not in DEFAULTS:
            raise ConfigError(f"Unknown configuration field: {key}")
        self.data[key] = value

    def get_value(self, key: str, default: Any = None) -> Any:
        """
        Get a configuration value.

        Args:
            key: Field name
            default: Value returned when the field is unset

        Returns:
            The field value or default
        """
        value = self.data.get(key)
        return default if value is None else value

    def apply_preset(self, name: str) -> None:
        """Override l, q, p and half_subalgebra with a named preset."""
        from deformation.presets import preset_data

        self.data.update(preset_data(name))
        self.data["preset"] = name
        logger.debug(f"Applied preset {name}")

    @property
    def suites(self) -> List[str]:
        return list(self.data["suites"])

    def validate(self) -> Tuple[bool, str]:
        """
        Validate the configuration data.

        Returns:
            tuple: (is_valid, error_message)
        """
        if self.data.get("q") is None:
            return False, "q is required (or choose a preset)"
        for key in INTEGER_FIELDS:
            value = self.data.get(key)
            if not isinstance(value, int) or isinstance(value, bool):
                return False, f"{key} must be an integer"
        if self.data["order"] < 1:
            return False, "order must be positive"
        if self.data["samples"] < 0:
            return False, "samples must be nonnegative"
        unknown = [name for name in self.data["suites"] if name not in SUITE_NAMES]
        if unknown:
            return False, f"Unknown suites: {', '.join(unknown)}"
        try:
            from arith import HalfInt

            if HalfInt.of(self.data["max_weight"]).twice_value < 0:
                return False, "max_weight must be nonnegative"
            spec = self.build_series_spec()
        except (ConfigError, ParseError, ValueError) as e:
            return False, str(e)
        declared = self.data.get("l")
        if declared is not None and declared != spec.l:
            return False, f"l = {declared} does not match a {spec.l}x{spec.l} q matrix"
        return True, ""

    def build_spec(self):
        """
        Parse q into a validated QSpec.

        Raises:
            ConfigError: If q is missing, malformed or not skew
        """
        from qalgebra import QSpec, validate_q

        rows = self.data.get("q")
        if not rows or not isinstance(rows, list) or any(not isinstance(row, list) for row in rows):
            raise ConfigError("q must be a non-empty list of rows")
        if any(len(row) != len(rows) for row in rows):
            raise ConfigError(f"q must be a square matrix, got row lengths {[len(row) for row in rows]}")
        try:
            spec = QSpec.from_rows([[str(entry) for entry in row] for row in rows])
            validate_q(spec)
        except (ParseError, SkewViolation, ValueError) as e:
            raise ConfigError(f"Invalid q: {e}") from e
        return spec

    def build_series_spec(self):
        """
        Parse q, p and order into a validated QSeriesSpec.

        Raises:
            ConfigError: If any entry is malformed or an invariant fails
        """
        from deformation.spec import QSeriesSpec

        spec = self.build_spec()
        p_rows = self.data.get("p")
        try:
            series_spec = QSeriesSpec.from_strings(spec.to_strings(), p_rows, self.data["order"])
        except (ParseError, ValueError, TypeError) as e:
            raise ConfigError(f"Invalid p: {e}") from e
        is_valid, message = series_spec.validate()
        if not is_valid:
            raise ConfigError(message)
        return series_spec

    def to_dict(self) -> Dict[str, Any]:
        """The configuration as plain JSON data."""
        return copy.deepcopy(self.data)
