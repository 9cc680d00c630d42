"""
Q-Algebra Module

This module contains the associative algebra A_Q: generator words, normal
forms, the grading cocycle, sigma_q and the twist and smash-relation checks.
"""

from .spec import QSpec, validate_q
from .words import (
    Generator,
    Word,
    GradeVec,
    AlgebraElement,
    KIND_X,
    KIND_Y,
    X,
    Y,
    grade,
    is_canonical,
    parse_generator,
    parse_word,
    format_word,
    format_terms,
)
from .algebra import QAlgebra, epsilon, sigma_q, normal_form, recolor, split_by_color
from .twist import TwistedTensorModel, twist_check, smash_relation_check
from .checks import confluence_check, associativity_check, pbw_count_check

__all__ = [
    'QSpec',
    'validate_q',
    'Generator',
    'Word',
    'GradeVec',
    'AlgebraElement',
    'KIND_X',
    'KIND_Y',
    'X',
    'Y',
    'grade',
    'is_canonical',
    'parse_generator',
    'parse_word',
    'format_word',
    'format_terms',
    'QAlgebra',
    'epsilon',
    'sigma_q',
    'normal_form',
    'recolor',
    'split_by_color',
    'TwistedTensorModel',
    'twist_check',
    'smash_relation_check',
    'confluence_check',
    'associativity_check',
    'pbw_count_check',
]
