from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import susa as sa
from tests.strategies import finite_sexagesimals, rationals, regular_denominators


@pytest.mark.parametrize(
    "text, value",
    [
        ("14,24", Fraction(864)),
        ("0;5", Fraction(1, 12)),
        ("0;6,40", Fraction(1, 9)),
        ("1,12;15", Fraction(289, 4)),
        ("8,0,0", Fraction(28800)),
        ("1,55,12,0,0", Fraction(24_883_200)),
        ("-0;30", Fraction(-1, 2)),
        ("  3  ", Fraction(3)),
        ("0", Fraction(0)),
    ],
)
def test_parse_sex(text, value):
    assert sa.parse_sex(text) == value


@pytest.mark.parametrize(
    "text, column",
    [
        ("1,2a", 4),
        ("0;60", 3),
        ("1;2;3", 4),
        ("", 1),
        ("1,,2", 3),
        (";30", 1),
    ],
)
def test_parse_sex_reports_column(text, column):
    with pytest.raises(sa.NumeralSyntaxError) as error:
        sa.parse_sex(text)
    assert error.value.column == column


def test_numeral_syntax_error_is_value_error():
    with pytest.raises(ValueError):
        sa.parse_sex("x")


@pytest.mark.parametrize(
    "value, absolute, floating",
    [
        (Fraction(72), "1,12", "1,12"),
        (Fraction(1, 12), "0;5", "5"),
        (Fraction(1, 9), "0;6,40", "6,40"),
        (Fraction(289, 4), "1,12;15", "1,12,15"),
        (Fraction(24_883_200), "1,55,12,0,0", "1,55,12"),
        (Fraction(0), "0", "0"),
        (Fraction(-3, 2), "-1;30", "-1,30"),
    ],
)
def test_format_sex(value, absolute, floating):
    assert sa.format_sex(value) == absolute
    assert sa.format_sex(value, sa.FormatMode.floating) == floating
    assert sa.format_sex(value, "floating") == floating


def test_format_sex_truncates_non_terminating_expansions():
    text = sa.format_sex(Fraction(1, 7), max_fraction_places=4)
    assert text == "0;8,34,17,8" + sa.TRUNCATION_MARKER
    assert not sa.to_digits(Fraction(1, 7), 4).exact


def test_to_digits():
    digits = sa.to_digits(Fraction(289, 4))
    assert digits == sa.SexDigits(1, (1, 12), (15,), True)
    with pytest.raises(ValueError):
        sa.to_digits(1, 0)


@settings(max_examples=1000)
@given(finite_sexagesimals)
def test_format_then_parse_is_identity_for_finite_values(q):
    assert sa.parse_sex(sa.format_sex(q)) == q


@settings(max_examples=500)
@given(rationals, rationals)
def test_field_operations_are_exact(q1, q2):
    assert sa.add(q1, q2) == q1 + q2
    assert sa.sub(sa.add(q1, q2), q2) == q1
    assert sa.mul(q1, q2) == q1 * q2
    if q2:
        assert sa.mul(sa.div(q1, q2), q2) == q1


@settings(max_examples=1000)
@given(rationals, rationals, rationals)
def test_field_laws(q1, q2, q3):
    assert sa.add(q1, q2) == sa.add(q2, q1)
    assert sa.mul(q1, q2) == sa.mul(q2, q1)
    assert sa.add(sa.add(q1, q2), q3) == sa.add(q1, sa.add(q2, q3))
    assert sa.mul(sa.mul(q1, q2), q3) == sa.mul(q1, sa.mul(q2, q3))
    assert sa.mul(q1, sa.add(q2, q3)) == sa.add(sa.mul(q1, q2), sa.mul(q1, q3))


def test_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        sa.div(1, 0)
    with pytest.raises(ZeroDivisionError):
        sa.reciprocal(0)


@pytest.mark.parametrize(
    "n, numeral",
    [(2, "0;30"), (3, "0;20"), (9, "0;6,40"), (12, "0;5"), (18, "0;3,20"), (1, "1")],
)
def test_reciprocal(n, numeral):
    assert sa.format_sex(sa.reciprocal(n)) == numeral


@settings(max_examples=1000)
@given(regular_denominators)
def test_regular_numbers_have_finite_reciprocals(n):
    assert sa.is_regular(n)
    assert sa.is_finite_sexagesimal(sa.reciprocal(n))
    assert sa.format_sex(sa.reciprocal(n)).count(sa.TRUNCATION_MARKER) == 0


@settings(max_examples=500)
@given(st.integers(1, 10**6))
def test_regularity_matches_finite_expansion(n):
    assert sa.is_regular(n) == sa.to_digits(Fraction(1, n), 64).exact


def test_regular_factors():
    assert sa.regular_factors(12) == sa.RegularFactors(2, 1, 0, 1)
    assert str(sa.regular_factors(12)) == "2^2·3"
    assert sa.regular_factors(7).residue == 7
    assert not sa.regular_factors(14).regular
    assert sa.is_regular(5)
    assert not sa.is_regular(7)
    with pytest.raises(ValueError):
        sa.regular_factors(0)


@pytest.mark.parametrize(
    "expression, value",
    [
        ("14,24 * 0;5", Fraction(72)),
        ("1 - 0;20", Fraction(2, 3)),
        ("(8;30 * 8;30) + 0;45", Fraction(73)),
        ("36 / 9", Fraction(4)),
        ("-3 + 10", Fraction(7)),
    ],
)
def test_evaluate(expression, value):
    assert sa.evaluate(expression) == value


@pytest.mark.parametrize("expression", ["1 +", "(1", "1 2", "1 % 2", ""])
def test_evaluate_rejects_malformed_expressions(expression):
    with pytest.raises(sa.NumeralSyntaxError):
        sa.evaluate(expression)


def test_evaluate_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        sa.evaluate("1 / 0")


@settings(max_examples=500)
@given(rationals.filter(bool))
def test_reciprocal_is_an_involution(q):
    assert sa.reciprocal(sa.reciprocal(q)) == q
    assert sa.mul(q, sa.reciprocal(q)) == 1


def test_regular_numbers_up_to_ten_thousand():
    for n in range(1, 10_001):
        assert sa.is_regular(n) == sa.is_finite_sexagesimal(Fraction(1, n)) == sa.to_digits(Fraction(1, n), 64).exact


@settings(max_examples=1000)
@given(finite_sexagesimals.filter(bool))
def test_floating_form_has_no_zero_words_at_either_end(q):
    words = sa.format_sex(q, sa.FormatMode.floating).lstrip("-").split(",")
    assert words[0] != "0"
    assert words[-1] != "0"
    assert all(0 <= int(word) < 60 for word in words)
