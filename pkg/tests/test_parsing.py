import random

import pytest
from hypothesis import given, settings, strategies as st

from hopfforge.errors import NegativePower, ParseError, UnknownGenerator
from hopfforge.freealg import NcPoly
from hopfforge.parsing import parse_element, parse_word
from hopfforge.presets import build
from hopfforge.scalars import quad

PRESETS = ["F:t=1", "A:b=1,xi=2", "A:b=1,xi=sqrt(2)", "C:m=2", "E:n=2", "heis", "zxz2", "env:sl2"]


def test_grammar_examples():
    F1 = build("F:t=1")
    assert parse_element("x^-1*y*x^2", F1) == NcPoly.word((-1, 2, 1, 1))
    p = parse_element("2*y + 3/2*(x - 1)", F1)
    assert F1.format(p) == "2*y + 3/2*x - 3/2"
    E1 = build("E:n=1")
    assert E1.format(parse_element("y^2", E1)) == "x0^2 - 1"
    assert E1.format(parse_element("-(x0 + y)^2", E1)) == "-2*x0^2 + 1"


def test_quadratic_coefficients():
    A = build("A:b=1,xi=sqrt(2)")
    p = parse_element("(1 + sqrt(2))*y", A)
    assert p == NcPoly.word((2,), quad(2, 1, 1))
    assert A.format(p) == "(1+sqrt(2))*y"
    q = parse_element("(1 + sqrt(2))*y - sqrt(2)*g + (-1/2*sqrt(2))", A)
    assert A.format(q) == "(-sqrt(2))*g + (1+sqrt(2))*y + (-1/2*sqrt(2))"
    F1 = build("F:t=1")
    with pytest.raises(ParseError):
        parse_element("sqrt(2)*y", F1)


@pytest.mark.parametrize("src,pos", [("x*", 2), ("x + + y", 4), ("2/0*x", 0), ("(x", 2), ("x y", 2), ("x$y", 1)])
def test_parse_errors_carry_position(src, pos):
    F1 = build("F:t=1")
    with pytest.raises(ParseError) as exc:
        parse_element(src, F1)
    assert exc.value.pos == pos


def test_semantic_errors():
    F1 = build("F:t=1")
    with pytest.raises(UnknownGenerator):
        parse_element("q", F1)
    with pytest.raises(NegativePower):
        parse_element("y^-1", F1)
    with pytest.raises(ParseError):
        parse_element("   ", F1)
    assert parse_word("x^-1*y", F1) == (-1, 2)


@pytest.mark.parametrize("sel", PRESETS)
@settings(max_examples=100)
@given(seed=st.integers(0, 1_000_000))
def test_print_parse_round_trip(sel, seed):
    H = build(sel)
    p = H.random_element(random.Random(seed), 4)
    assert parse_element(H.format(p), H) == p
