"""
Vertex Module

This module contains the state-field engine of V_Q, its identity checks and
the conformal structure.
"""

from .engine import VertexEngine, state_mode, dop
from .checks import (
    Braiding,
    braiding,
    leading_generator,
    creation_check,
    derivation_check,
    truncation_check,
    weight_check,
    slocality_witness,
    weak_assoc_check,
    sjacobi_check,
    mode_product_check,
    random_mode_product_check,
    generator_states,
    binomial_window,
    kernel_coefficient,
)
from .conformal import (
    VirasoroReport,
    VirasoroOperators,
    conformal_vector,
    expected_central_charge,
    virasoro_check,
)

__all__ = [
    'VertexEngine',
    'state_mode',
    'dop',
    'Braiding',
    'braiding',
    'leading_generator',
    'creation_check',
    'derivation_check',
    'truncation_check',
    'weight_check',
    'slocality_witness',
    'weak_assoc_check',
    'sjacobi_check',
    'mode_product_check',
    'random_mode_product_check',
    'generator_states',
    'binomial_window',
    'kernel_coefficient',
    'VirasoroReport',
    'VirasoroOperators',
    'conformal_vector',
    'expected_central_charge',
    'virasoro_check',
]
