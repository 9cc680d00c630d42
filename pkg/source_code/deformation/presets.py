"""
Presets Module

This module provides the named example families as plain configuration
data, parsed through the same path as user configurations.
"""

import logging
from typing import Any, Dict, List

from utils.errors import ConfigError
from .spec import QSeriesSpec

logger = logging.getLogger(__name__)

# Colors of yangian-sl2: 1 = e, 2 = h, 3 = f
PRESETS: Dict[str, Dict[str, Any]] = {
    "weyl": {
        "l": 1,
        "q": [["1"]],
        "p": [[["1"]]],
        "half_subalgebra": False,
    },
    "clifford": {
        "l": 1,
        "q": [["-1"]],
        "p": [[["1"]]],
        "half_subalgebra": False,
    },
    "mixed": {
        "l": 2,
        "q": [["1", "i"], ["-i", "-1"]],
        "p": [[["1"], ["1"]], [["1"], ["1"]]],
        "half_subalgebra": False,
    },
    "zf-linear": {
        "l": 1,
        "q": [["-1"]],
        "p": [[["1", "1"]]],
        "half_subalgebra": False,
    },
    "yangian-sl2": {
        "l": 3,
        "q": [
            ["-1", "-1", "1"],
            ["-1", "1", "-1"],
            ["1", "-1", "-1"],
        ],
        "p": [
            [["1", "1"], ["1", "1"], ["1"]],
            [["1", "1"], ["1"], ["1", "-1"]],
            [["1"], ["1", "-1"], ["1", "-1"]],
        ],
        "half_subalgebra": True,
    },
}


def preset_names() -> List[str]:
    """Names of all presets."""
    return list(PRESETS)


def preset_data(name: str) -> Dict[str, Any]:
    """
    The configuration fields of a preset.

    Raises:
        ConfigError: If the preset is unknown
    """
    if name not in PRESETS:
        raise ConfigError(f"Unknown preset '{name}'; choose from {', '.join(PRESETS)}")
    data = PRESETS[name]
    return {
        "l": data["l"],
        "q": [list(row) for row in data["q"]],
        "p": [[list(entry) for entry in row] for row in data["p"]],
        "half_subalgebra": data["half_subalgebra"],
    }


def load_preset(name: str, order: int = 8) -> QSeriesSpec:
    """Build the series spec of a preset."""
    data = preset_data(name)
    return QSeriesSpec.from_strings(data["q"], data["p"], order)
