"""
Coefficient Window Module

This module provides finite multi-variable coefficient boxes with per-cell
exactness flags. Payloads are scalars or states; a missing cell is zero.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from utils.errors import InvalidParameter
from .scalar import ZERO, binom, sign_power
from .series import TruncSeries

logger = logging.getLogger(__name__)

Cell = Tuple[int, ...]
Box = Tuple[Tuple[int, int], ...]

EXPAND_IN_SECOND = "expand-in-second"
EXPAND_IN_FIRST = "expand-in-first"


@dataclass
class WindowComparison:
    """
    Outcome of comparing two windows cell by cell.
    """

    matched: int = 0
    mismatched: List[Cell] = field(default_factory=list)
    uncertified: List[Cell] = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return not self.mismatched


def _payloads_equal(left: Any, right: Any) -> bool:
    if left is None:
        return not right
    if right is None:
        return not left
    return left == right


class CoeffWindow:
    """
    Coefficients of a multi-variable series over a finite box of degrees.
    """

    def __init__(
        self,
        variables: Sequence[str],
        box: Box,
        cells: Dict[Cell, Any],
        valid: FrozenSet[Cell],
        floor: Optional[Cell] = None,
    ):
        """
        Initialize a window.

        Args:
            variables: Ordered variable tags (one to three)
            box: Inclusive degree range per variable
            cells: Map multi-degree -> payload; absent cells are zero
            valid: Cells whose payload is certified exact
            floor: Per-variable degree below which every coefficient is zero,
                when known
        """
        if not 1 <= len(variables) <= 3 or len(box) != len(variables):
            raise InvalidParameter(f"Bad window shape: {variables} / {box}")
        self.variables = tuple(variables)
        self.box = tuple(tuple(bounds) for bounds in box)
        self.cells = {cell: value for cell, value in cells.items() if self.in_box(cell) and value}
        self.valid = frozenset(cell for cell in valid if self.in_box(cell))
        self.floor = floor

    def in_box(self, cell: Cell) -> bool:
        """Check whether a cell lies inside the box."""
        return all(low <= degree <= high for degree, (low, high) in zip(cell, self.box))

    def iter_cells(self) -> Iterator[Cell]:
        """Iterate over all cells of the box in lexicographic order."""
        ranges = [range(low, high + 1) for low, high in self.box]
        return itertools.product(*ranges)

    def get(self, cell: Cell) -> Any:
        """Payload at a cell, None when zero."""
        return self.cells.get(cell)

    def is_valid(self, cell: Cell) -> bool:
        """Check whether a cell is certified."""
        return cell in self.valid

    def compare(self, other: "CoeffWindow") -> WindowComparison:
        """
        Compare against another window on the common box.

        Only cells certified in both windows are compared; the others are
        reported as uncertified.

        Args:
            other: Window over the same variables

        Returns:
            WindowComparison: matched, mismatched and uncertified cells
        """
        if self.variables != other.variables:
            raise InvalidParameter(f"Variables differ: {self.variables} vs {other.variables}")
        result = WindowComparison()
        for cell in self.iter_cells():
            if not other.in_box(cell):
                continue
            if not (self.is_valid(cell) and other.is_valid(cell)):
                result.uncertified.append(cell)
                continue
            if _payloads_equal(self.get(cell), other.get(cell)):
                result.matched += 1
            else:
                result.mismatched.append(cell)
        return result

    def multiply(self, other: "CoeffWindow") -> "CoeffWindow":
        """
        Product of two scalar windows that both carry a degree floor.

        A product cell is certified when every factor cell it needs lies in
        the factor boxes and is certified.

        Args:
            other: Scalar window over the same variables with a floor

        Returns:
            CoeffWindow: The product over this window's box

        Raises:
            InvalidParameter: If a floor is missing or the variables differ
        """
        if self.floor is None or other.floor is None:
            raise InvalidParameter("Window multiplication needs a degree floor on both factors")
        if self.variables != other.variables:
            raise InvalidParameter(f"Variables differ: {self.variables} vs {other.variables}")

        cells: Dict[Cell, Any] = {}
        valid = set()
        for cell in self.iter_cells():
            tops = [degree - low for degree, low in zip(cell, other.floor)]
            ranges = [range(low, top + 1) for low, top in zip(self.floor, tops)]
            certified = True
            total = ZERO
            for left_cell in itertools.product(*ranges):
                right_cell = tuple(d - e for d, e in zip(cell, left_cell))
                if not (self.in_box(left_cell) and self.is_valid(left_cell)
                        and other.in_box(right_cell) and other.is_valid(right_cell)):
                    certified = False
                    break
                left = self.get(left_cell)
                right = other.get(right_cell)
                if left is not None and right is not None:
                    total = total + left * right
            if certified:
                valid.add(cell)
                if total:
                    cells[cell] = total
        floor = tuple(a + b for a, b in zip(self.floor, other.floor))
        return CoeffWindow(self.variables, self.box, cells, frozenset(valid), floor)


def default_two_var_box(series: TruncSeries) -> Box:
    """A box covering every certified cell of a two-variable expansion."""
    span = series.order - 1 - min(series.min_deg, 0)
    low = min(0, 2 * series.min_deg - series.order + 1)
    return ((low, span), (low, span))


def expand_two_var(
    series: TruncSeries,
    region: str = EXPAND_IN_SECOND,
    box: Optional[Box] = None,
    names: Tuple[str, str] = ("x1", "x2"),
    sign: int = -1,
) -> CoeffWindow:
    """
    Coefficients of series(x1 - x2), or of series(x1 + x2) when sign is +1,
    over a two-variable box.

    With region "expand-in-second" every power (x1 -+ x2)^d is expanded in
    nonnegative powers of x2, with "expand-in-first" in nonnegative powers
    of x1. A cell of total degree d is certified iff d < series.order.

    Args:
        series: A power series or a series with a finite principal part
        region: EXPAND_IN_SECOND or EXPAND_IN_FIRST
        box: Degree range per variable; defaults to the certified region
        names: Variable tags of the window
        sign: -1 for series(x1 - x2), +1 for series(x1 + x2)

    Returns:
        CoeffWindow: The expansion
    """
    if region not in (EXPAND_IN_SECOND, EXPAND_IN_FIRST):
        raise InvalidParameter(f"Unknown expansion region: {region}")
    if sign not in (-1, 1):
        raise InvalidParameter(f"Sign must be -1 or 1, got {sign}")
    if box is None:
        box = default_two_var_box(series)

    cells: Dict[Cell, Any] = {}
    (low1, high1), (low2, high2) = box
    for degree, coeff in series.coeffs.items():
        if region == EXPAND_IN_SECOND:
            steps = range(max(0, low2), high2 + 1)
        else:
            steps = range(max(0, low1), high1 + 1)
        for j in steps:
            if region == EXPAND_IN_SECOND:
                cell = (degree - j, j)
                value = coeff * binom(degree, j) * (sign_power(j) if sign < 0 else 1)
            else:
                cell = (j, degree - j)
                value = coeff * binom(degree, j) * (sign_power(degree - j) if sign < 0 else 1)
            if not (low1 <= cell[0] <= high1 and low2 <= cell[1] <= high2):
                continue
            if value:
                cells[cell] = cells.get(cell, ZERO) + value

    valid = set()
    for cell in itertools.product(range(low1, high1 + 1), range(low2, high2 + 1)):
        if cell[0] + cell[1] < series.order:
            valid.add(cell)

    floor = None
    if series.min_deg >= 0:
        floor = (0, 0)
    logger.debug(f"Expanded series in {region} over box {box}: {len(cells)} nonzero cells")
    return CoeffWindow(names, box, cells, frozenset(valid), floor)


def embed_series(
    series: TruncSeries,
    position: int,
    variables: Sequence[str],
    box: Box,
) -> CoeffWindow:
    """
    View a one-variable series as a window in several variables.

    Cells off the series axis are certified zeros; on the axis a cell is
    certified iff its degree is below the series order.

    Args:
        series: Series with min_deg >= 0
        position: Index of the series variable among `variables`
        variables: Window variable tags
        box: Degree range per variable

    Returns:
        CoeffWindow: The embedded series
    """
    if series.min_deg < 0:
        raise InvalidParameter("Only power series can be embedded")
    cells: Dict[Cell, Any] = {}
    valid = set()
    ranges = [range(low, high + 1) for low, high in box]
    for cell in itertools.product(*ranges):
        off_axis = any(degree != 0 for index, degree in enumerate(cell) if index != position)
        degree = cell[position]
        if off_axis or degree < 0:
            valid.add(cell)
            continue
        if degree < series.order:
            valid.add(cell)
            value = series.coeffs.get(degree)
            if value:
                cells[cell] = value
    floor = tuple(0 for _ in variables)
    return CoeffWindow(variables, box, cells, frozenset(valid), floor)


def product_box(radius: int, dimension: int, low: int = 0) -> Box:
    """A cubic box [low, radius] in every variable."""
    return tuple((low, radius) for _ in range(dimension))
