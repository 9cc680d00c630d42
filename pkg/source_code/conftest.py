"""
Shared pytest fixtures for the QVA Verify test suite.
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from deformation import DressedModel, load_preset  # noqa: E402
from vertex import VertexEngine  # noqa: E402


@pytest.fixture
def preset_spec():
    """Factory for the constant QSpec of a named preset."""

    def build(name):
        return load_preset(name).constant_spec()

    return build


@pytest.fixture
def clifford_spec(preset_spec):
    return preset_spec("clifford")


@pytest.fixture
def weyl_spec(preset_spec):
    return preset_spec("weyl")


@pytest.fixture
def mixed_spec(preset_spec):
    return preset_spec("mixed")


@pytest.fixture
def clifford_engine(clifford_spec):
    return VertexEngine(clifford_spec)


@pytest.fixture
def zf_linear_model():
    return DressedModel(load_preset("zf-linear"))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: checks at full scale, deselect with -m 'not slow'")
