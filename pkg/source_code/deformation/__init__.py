"""
Deformation Module

This module contains the deformed family Q(x): its data and presets, the
pseudo-automorphisms Phi_i, the dressed fields, the exchange relations and
the filtration checks.
"""

from .spec import QSeriesSpec, SERIES_VAR, build_qx, format_polynomial, parse_polynomial
from .presets import PRESETS, load_preset, preset_data, preset_names
from .pseudo import (
    PseudoAutomorphism,
    SeriesState,
    commutativity_check,
    format_series_state,
    inverse_check,
    phi_apply,
    pseudo_law_check,
)
from .dressed import DressedModel
from .relations import FAMILIES, braiding_window, zf_check_all, zf_relation_check
from .filtration import (
    FiltrationLevel,
    dressed_sequences,
    filtration_E_check,
    filtration_F,
    filtration_levels,
    gr_compare,
    half_basis_check,
    half_sequences,
)

__all__ = [
    'QSeriesSpec',
    'SERIES_VAR',
    'build_qx',
    'format_polynomial',
    'parse_polynomial',
    'PRESETS',
    'load_preset',
    'preset_data',
    'preset_names',
    'PseudoAutomorphism',
    'SeriesState',
    'commutativity_check',
    'format_series_state',
    'inverse_check',
    'phi_apply',
    'pseudo_law_check',
    'DressedModel',
    'FAMILIES',
    'braiding_window',
    'zf_check_all',
    'zf_relation_check',
    'FiltrationLevel',
    'dressed_sequences',
    'filtration_E_check',
    'filtration_F',
    'filtration_levels',
    'gr_compare',
    'half_basis_check',
    'half_sequences',
]
