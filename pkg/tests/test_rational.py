from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from polygrade.rational import format_rational, in_span, parse_rational, rank

fractions = st.fractions(max_denominator=7).filter(lambda q: abs(q) <= 20)


@pytest.mark.parametrize("text, value", [("3", 3), ("-12", -12), ("3/2", Fraction(3, 2)), (" -4/6 ", Fraction(-2, 3))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", [1.5, True, "x", "1/0", None])
def test_parse_rational_rejects(bad):
    with pytest.raises((TypeError, ValueError, ZeroDivisionError)):
        parse_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-3, 2)) == "-3/2"


@given(st.integers(1, 5).flatmap(lambda c: st.lists(st.lists(fractions, min_size=c, max_size=c), min_size=1, max_size=5)))
def test_rank_matches_sympy(rows):
    assert rank(rows) == sympy.Matrix(rows).rank()


def test_in_span():
    basis = [(Fraction(1), Fraction(0), Fraction(1))]
    assert in_span((Fraction(3), Fraction(0), Fraction(3)), basis)
    assert not in_span((Fraction(1), Fraction(1), Fraction(0)), basis)
    assert in_span((0, 0, 0), [])
    assert not in_span((1, 0, 0), [])
