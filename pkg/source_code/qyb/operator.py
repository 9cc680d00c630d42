"""
Diagonal S-Operator Module

This module provides the diagonal one-parameter operator S(x) on H (x) H,
stored eigenvalue-wise on the basis tags a_i and b_i, with the unitarity
and quantum Yang-Baxter verifications.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from arith import (
    EXPAND_IN_SECOND,
    CoeffWindow,
    TruncSeries,
    embed_series,
    expand_two_var,
    product_box,
    series_mul,
    series_negate_var,
    series_one,
)
from deformation import QSeriesSpec, build_qx
from models.check import CheckReport

logger = logging.getLogger(__name__)

TAG_A = "a"
TAG_B = "b"

Tag = Tuple[str, int]


def format_tag(tag: Tag) -> str:
    """Text of a basis tag, e.g. `a1`."""
    return f"{tag[0]}{tag[1]}"


@dataclass
class DiagonalS:
    """
    S(x) acting on t (x) t' by the scalar series entry(t, t').
    """

    l: int
    order: int
    entries: Dict[Tuple[Tag, Tag], TruncSeries]

    def tags(self) -> List[Tag]:
        """The 2l basis tags a_1..a_l, b_1..b_l."""
        return [(kind, color) for kind in (TAG_A, TAG_B) for color in range(1, self.l + 1)]

    def entry_for(self, left: Tag, right: Tag) -> TruncSeries:
        """The eigenvalue series on left (x) right."""
        return self.entries[(left, right)]

    def to_dict(self) -> Dict[str, List[str]]:
        """Entries as Scalar text coefficient lists keyed `a1,b2`."""
        return {
            f"{format_tag(left)},{format_tag(right)}": series.format_coefficients()
            for (left, right), series in sorted(self.entries.items())
        }


def build_S(spec: QSeriesSpec) -> DiagonalS:
    """
    Build S(x) from q(x): (a_i,a_j) and (b_i,b_j) carry q_ji(x); (a_i,b_j)
    and (b_i,a_j) carry q_ij(-x).

    Args:
        spec: The deformed data

    Returns:
        DiagonalS: The operator, certified below spec.order
    """
    qx = build_qx(spec)
    entries: Dict[Tuple[Tag, Tag], TruncSeries] = {}
    for i, j in itertools.product(range(1, spec.l + 1), repeat=2):
        same = qx[j - 1][i - 1]
        mixed = series_negate_var(qx[i - 1][j - 1])
        entries[((TAG_A, i), (TAG_A, j))] = same
        entries[((TAG_B, i), (TAG_B, j))] = same
        entries[((TAG_A, i), (TAG_B, j))] = mixed
        entries[((TAG_B, i), (TAG_A, j))] = mixed
    logger.debug(f"Built diagonal S for l={spec.l} to order {spec.order}")
    return DiagonalS(spec.l, spec.order, entries)


def unitarity_check(operator: DiagonalS, order: int = None) -> CheckReport:
    """
    Check S(x) S^21(-x) = 1: entry(s, t)(x) entry(t, s)(-x) = 1 below the
    order for every ordered pair of tags.
    """
    order = operator.order if order is None else order
    report = CheckReport("unitarity")
    one = series_one("x", order)
    for left, right in itertools.product(operator.tags(), repeat=2):
        product = series_mul(
            operator.entry_for(left, right), series_negate_var(operator.entry_for(right, left))
        ).truncate(order)
        report.record(
            product.equal_within(one),
            f"{format_tag(left)},{format_tag(right)}: {product.format_coefficients()}",
        )
    report.details["order"] = order
    return report


def _side(factors: List[CoeffWindow]) -> CoeffWindow:
    result = factors[0]
    for factor in factors[1:]:
        result = result.multiply(factor)
    return result


def qybe_check(operator: DiagonalS, order: int = None, radius: int = 3) -> CheckReport:
    """
    Check S12(x1) S13(x1 - x2) S23(x2) = S23(x2) S13(x1 - x2) S12(x1) on
    every triple of tags, each side multiplied out as two-variable windows.

    Args:
        operator: The diagonal operator
        order: Truncation order, defaults to the operator's
        radius: Window box [0, radius]^2

    Returns:
        CheckReport: One comparison per triple; a triple without any
            certified cell is inconclusive
    """
    order = operator.order if order is None else order
    box = product_box(radius, 2)
    names = ("x1", "x2")
    report = CheckReport("qybe")
    uncertified = 0
    for s, t, u in itertools.product(operator.tags(), repeat=3):
        s12 = embed_series(operator.entry_for(s, t).truncate(order), 0, names, box)
        s13 = expand_two_var(operator.entry_for(s, u).truncate(order), EXPAND_IN_SECOND, box, names)
        s23 = embed_series(operator.entry_for(t, u).truncate(order), 1, names, box)
        left = _side([s12, s13, s23])
        right = _side([s23, s13, s12])
        comparison = left.compare(right)
        witness = f"{format_tag(s)},{format_tag(t)},{format_tag(u)}"
        uncertified += len(comparison.uncertified)
        if not comparison.matched and comparison.uncertified:
            report.record_inconclusive(witness)
            continue
        report.record(comparison.equal, f"{witness} at {comparison.mismatched[:3]}")
    report.details.update({"order": order, "radius": radius, "uncertified_cells": uncertified})
    return report
