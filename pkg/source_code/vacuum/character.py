"""
Character Module

This module provides the character oracle of the vacuum module, computed
independently of basis enumeration by expanding the product formula.
"""

import logging
from typing import List

import sympy

from arith import HalfInt
from models.check import CheckReport
from qalgebra import QSpec

logger = logging.getLogger(__name__)

_S = sympy.Symbol('s')


def character_coefficients(spec: QSpec, max_weight) -> List[int]:
    """
    Coefficients of the character in s = t^(1/2) up to a weight.

    Each bosonic color contributes prod_n (1 - s^(2n-1))^-2 and each
    fermionic color prod_n (1 + s^(2n-1))^2.

    Args:
        spec: The (l, Q) data
        max_weight: Weight cutoff

    Returns:
        list: Entry k is the dimension at weight k/2
    """
    limit = HalfInt.of(max_weight).twice_value
    if limit < 0:
        return []
    expression = sympy.Integer(1)
    for color in spec.colors():
        for n in range(1, (limit + 1) // 2 + 1):
            power = _S ** (2 * n - 1)
            if spec.is_fermionic(color):
                expression *= (1 + power) ** 2
            else:
                expression *= 1 / (1 - power) ** 2
    expanded = sympy.series(expression, _S, 0, limit + 1).removeO()
    polynomial = sympy.Poly(expanded, _S)
    coefficients = [int(polynomial.coeff_monomial(_S ** k)) for k in range(limit + 1)]
    logger.debug(f"Character coefficients up to twice-weight {limit}: {coefficients}")
    return coefficients


def character_check(module, max_weight) -> CheckReport:
    """
    Compare graded dimensions from enumeration with the character oracle.

    Args:
        module: VacuumModule under test
        max_weight: Weight cutoff

    Returns:
        CheckReport: One comparison per half-integer weight; details carry
            the dimension table
    """
    report = CheckReport("character")
    oracle = character_coefficients(module.spec, max_weight)
    table = {}
    for twice, expected in enumerate(oracle):
        weight = HalfInt(twice)
        actual = module.graded_dim(weight)
        table[str(weight)] = actual
        report.record(actual == expected, f"weight {weight}: {actual} vs {expected}")
    report.details["graded_dims"] = table
    return report
