"""
Tests for the exact arithmetic layer: scalars, half-integers, truncated
series, coefficient windows and ranks.
"""

import random

import pytest
from sympy import Matrix

from arith import (
    EXPAND_IN_FIRST,
    EXPAND_IN_SECOND,
    HalfInt,
    IMAG_UNIT,
    ONE,
    ZERO,
    TruncSeries,
    binom,
    embed_series,
    exact_rank,
    expand_two_var,
    format_scalar,
    in_span,
    independent_rows,
    inverse,
    parse_scalar,
    power,
    product_box,
    scalar,
    series_add,
    series_divided_derivative,
    series_inv,
    series_mul,
    series_negate_var,
    series_one,
)
from utils.errors import InsufficientOrder, InvalidParameter, NotInvertible, ParseError, VariableMismatch


def coefficients(series):
    return series.format_coefficients()


@pytest.mark.parametrize("text, expected", [
    ("1/2", scalar((1, 2))),
    ("-3", scalar(-3)),
    ("i", IMAG_UNIT),
    ("-1/2i", scalar(0, (-1, 2))),
    ("1/2+1/2i", scalar((1, 2), (1, 2))),
    ("2/4", scalar((1, 2))),
])
def test_parse_scalar(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("text", ["", "abc", "1/0", "1//2", "2x"])
def test_parse_scalar_rejects_malformed_text(text):
    with pytest.raises(ParseError):
        parse_scalar(text)


def test_parse_scalar_rejects_non_string():
    with pytest.raises(ParseError):
        parse_scalar(1.5)


@pytest.mark.parametrize("value, text", [
    (scalar((1, 2)), "1/2"),
    (-IMAG_UNIT, "-i"),
    (scalar((1, 2), (1, 2)), "1/2+1/2i"),
    (scalar(3, -2), "3-2i"),
    (ZERO, "0"),
])
def test_format_scalar_canonical(value, text):
    assert format_scalar(value) == text
    assert parse_scalar(text) == value


def test_inverse_and_power():
    assert inverse(IMAG_UNIT) == -IMAG_UNIT
    assert power(IMAG_UNIT, 4) == ONE
    assert power(scalar(2), -2) == scalar((1, 4))
    with pytest.raises(NotInvertible):
        inverse(ZERO)


@pytest.mark.parametrize("top, bottom, expected", [
    (5, 2, 10),
    (-1, 3, -1),
    (-2, 2, 3),
    (3, 5, 0),
    (4, -1, 0),
])
def test_binom_extends_to_negative_top(top, bottom, expected):
    assert binom(top, bottom) == expected


def test_half_int_parsing_and_text():
    assert HalfInt.of("3/2").twice_value == 3
    assert HalfInt.of(2).twice_value == 4
    assert HalfInt.of("4/2") == HalfInt(4)
    assert str(HalfInt(3)) == "3/2"
    assert str(HalfInt(4)) == "2"
    assert HalfInt(3).floor() == 1
    with pytest.raises(ParseError):
        HalfInt.of("1/3")


def test_series_inverse_of_linear_polynomial():
    p = TruncSeries.polynomial("x", [ONE, ONE], 5)
    assert coefficients(series_inv(p)) == ["1", "-1", "1", "-1", "1"]


def test_series_ratio_matches_braiding_of_linear_family():
    p = TruncSeries.polynomial("x", [ONE, ONE], 5)
    ratio = series_mul(series_negate_var(p), series_inv(p)).truncate(5)
    assert coefficients(ratio) == ["1", "-2", "2", "-2", "2"]


def test_series_inverse_with_pole_lowers_the_order():
    series = TruncSeries("x", {1: ONE, 2: ONE}, 5, 1)
    inverted = series_inv(series)
    assert inverted.min_deg == -1
    assert inverted.order == 3
    assert coefficients(inverted) == ["1", "-1", "1", "-1"]


def test_series_inverse_starts_at_the_valuation():
    inverted = series_inv(TruncSeries("x", {1: ONE, 2: ONE}, 4))
    assert inverted.min_deg == -1
    assert inverted.order == 2
    assert inverted.format_coefficients() == ["1", "-1", "1"]


def test_series_inverse_needs_a_nonzero_coefficient():
    with pytest.raises(NotInvertible):
        series_inv(TruncSeries("x", {}, 4))
    with pytest.raises(NotInvertible):
        series_inv(TruncSeries("x", {5: ONE}, 4))


def test_coefficient_beyond_order_raises():
    series = TruncSeries.polynomial("x", [ONE, ONE], 3)
    assert series.coefficient(2) == ZERO
    with pytest.raises(InsufficientOrder):
        series.coefficient(3)


def test_divided_derivative():
    series = TruncSeries.polynomial("x", [scalar(1), scalar(2), scalar(3), scalar(4)], 4)
    derived = series_divided_derivative(series, 1)
    assert derived.order == 3
    assert coefficients(derived) == ["2", "6", "12"]
    assert coefficients(series_divided_derivative(series, 2)) == ["3", "12"]


def test_series_variables_must_match():
    with pytest.raises(VariableMismatch):
        series_add(TruncSeries.constant("x", ONE, 3), TruncSeries.constant("y", ONE, 3))


def test_product_order_is_the_smaller_order():
    a = TruncSeries.polynomial("x", [ONE, ONE], 3)
    b = TruncSeries.polynomial("x", [ONE, ONE], 6)
    product = series_mul(a, b)
    assert product.order == 3
    assert coefficients(product) == ["1", "2", "1"]


def test_expand_two_var_power_series():
    series = TruncSeries("x", {1: ONE}, 4)
    window = expand_two_var(series, EXPAND_IN_SECOND, product_box(2, 2))
    assert window.get((1, 0)) == ONE
    assert window.get((0, 1)) == -ONE
    assert window.get((1, 1)) is None
    assert window.is_valid((1, 2))
    assert not window.is_valid((2, 2))


def test_expand_two_var_regions_differ_on_a_pole():
    series = TruncSeries("x", {-1: ONE}, 3, -1)
    second = expand_two_var(series, EXPAND_IN_SECOND, ((-3, 0), (0, 2)))
    assert second.get((-1, 0)) == ONE
    assert second.get((-2, 1)) == ONE
    first = expand_two_var(series, EXPAND_IN_FIRST, ((0, 2), (-3, 0)))
    assert first.get((0, -1)) == -ONE
    assert first.get((1, -2)) == -ONE


def test_window_multiply_and_compare():
    box = product_box(2, 2)
    names = ("x1", "x2")
    linear = TruncSeries.polynomial("x", [ONE, ONE], 3)
    product = embed_series(linear, 0, names, box).multiply(embed_series(linear, 1, names, box))
    for cell in product.iter_cells():
        assert product.is_valid(cell)
        expected = ONE if cell[0] <= 1 and cell[1] <= 1 else None
        assert product.get(cell) == expected

    swapped = embed_series(linear, 1, names, box).multiply(embed_series(linear, 0, names, box))
    comparison = product.compare(swapped)
    assert comparison.equal
    assert comparison.matched == 9


def test_window_compare_reports_uncertified_cells():
    box = product_box(2, 2)
    names = ("x1", "x2")
    short = embed_series(TruncSeries.polynomial("x", [ONE], 2), 0, names, box)
    long = embed_series(TruncSeries.polynomial("x", [ONE], 3), 0, names, box)
    comparison = short.compare(long)
    assert (2, 0) in comparison.uncertified
    assert not comparison.mismatched


def test_exact_rank_over_gaussian_rationals():
    rows = [
        {"a": ONE, "b": IMAG_UNIT},
        {"a": IMAG_UNIT, "b": -ONE},
        {"c": scalar((1, 3))},
    ]
    assert exact_rank(rows) == 2
    assert exact_rank([]) == 0
    assert in_span(rows, {"a": scalar(2), "b": scalar(0, 2), "c": ONE})
    assert not in_span(rows, {"b": ONE})


def random_scalar(rng, nonzero=False):
    while True:
        value = scalar(rng.randint(-3, 3), rng.randint(-2, 2))
        if value or not nonzero:
            return value


def random_series(rng, order, valuation=0):
    """A series with a nonzero coefficient at `valuation`."""
    coeffs = {degree: random_scalar(rng) for degree in range(valuation + 1, order)}
    coeffs[valuation] = random_scalar(rng, nonzero=True)
    return TruncSeries("x", coeffs, order, min(valuation, 0))


@pytest.mark.parametrize("seed", range(6))
def test_series_product_is_associative(seed):
    rng = random.Random(seed)
    a, b, c = (random_series(rng, 6, rng.randint(-1, 1)) for _ in range(3))
    left = series_mul(series_mul(a, b), c)
    right = series_mul(a, series_mul(b, c))
    assert left.order == right.order
    assert left.equal_within(right)


@pytest.mark.parametrize("seed", range(6))
def test_series_times_inverse_is_one(seed):
    rng = random.Random(seed)
    a = random_series(rng, 6, rng.randint(-1, 2))
    product = series_mul(a, series_inv(a))
    assert product.order == 6 - a.valuation()
    assert product.equal_within(series_one("x", product.order))


@pytest.mark.parametrize("seed", range(4))
def test_negating_the_variable(seed):
    rng = random.Random(seed)
    a = random_series(rng, 5, rng.randint(-1, 1))
    b = random_series(rng, 5)
    twice = series_negate_var(series_negate_var(a))
    assert twice.coeffs == a.coeffs
    assert twice.order == a.order
    assert series_negate_var(series_mul(a, b)).equal_within(
        series_mul(series_negate_var(a), series_negate_var(b))
    )


@pytest.mark.parametrize("region, sign", [
    (EXPAND_IN_SECOND, -1),
    (EXPAND_IN_SECOND, 1),
    (EXPAND_IN_FIRST, -1),
    (EXPAND_IN_FIRST, 1),
])
@pytest.mark.parametrize("seed", range(3))
def test_two_variable_expansion_is_multiplicative(region, sign, seed):
    rng = random.Random(seed)
    f, g = random_series(rng, 5), random_series(rng, 5)
    box = product_box(4, 2)

    def expand(series):
        return expand_two_var(series, region, box, sign=sign)

    comparison = expand(f).multiply(expand(g)).compare(expand(series_mul(f, g)))
    assert comparison.equal, comparison.mismatched
    assert comparison.matched == 15


def test_expansion_sign_must_be_a_unit():
    with pytest.raises(InvalidParameter):
        expand_two_var(TruncSeries("x", {1: ONE}, 3), sign=2)


@pytest.mark.parametrize("seed", range(8))
def test_exact_rank_agrees_with_dense_rank(seed):
    rng = random.Random(seed)
    entries = [[rng.choice([0, 0, 0, 1, -1, 2]) for _ in range(6)] for _ in range(6)]
    if seed % 2:
        entries[5] = [a - b for a, b in zip(entries[0], entries[1])]
    rows = [{column: scalar(value) for column, value in enumerate(row) if value} for row in entries]
    expected = Matrix(entries).rank()
    assert exact_rank(rows) == expected
    assert len(independent_rows(rows)) == expected


def test_independent_rows_keep_the_first_of_each_direction():
    rows = [{"a": ONE}, {"a": scalar(2)}, {}, {"b": IMAG_UNIT}, {"a": ONE, "b": ONE}]
    assert independent_rows(rows) == [0, 3]
