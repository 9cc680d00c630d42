"""
Vacuum Module

This module contains the vacuum module V_Q: states, the generator action,
basis enumeration and the character oracle.
"""

from .state import State, VACUUM_TEXT, format_basis_word, linear_combination, word_weight, word_weight_twice
from .module import VacuumModule, enumerate_basis, graded_dim
from .character import character_coefficients, character_check

__all__ = [
    'State',
    'VACUUM_TEXT',
    'format_basis_word',
    'linear_combination',
    'word_weight',
    'word_weight_twice',
    'VacuumModule',
    'enumerate_basis',
    'graded_dim',
    'character_coefficients',
    'character_check',
]
