import random

import pytest

from apolar.errors import FormParseError
from apolar.forms import DUAL, Form, format_form
from apolar.parsing import parse_form

from conftest import random_form


def test_parse_examples():
    f = parse_form("x*y^1*z^4 + y^4*z^2")
    assert f == Form(3, 6, {(1, 1, 4): 1, (0, 4, 2): 1})
    z = parse_form("-1/2*y^2 + y^2 - 1/2*y^2")
    assert z.is_zero() and z.degree == 2


@pytest.mark.parametrize("text,fragment", [
    ("x + y^2", "inhomogeneous"),
    ("2x", "unexpected"),
    ("xy", "unknown variable"),
    ("x*w", "unknown variable"),
    ("x*", "expected a variable"),
    ("x^", "expected an integer"),
    ("x*b", "mixed"),
    ("1/0*x", "zero denominator"),
    ("", "empty"),
    ("x + + y", "expected a variable"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(FormParseError, match=fragment):
        parse_form(text)


def test_error_position():
    with pytest.raises(FormParseError) as info:
        parse_form("x*y + y^2 + z")
    assert info.value.position == 12


def test_binary_names():
    assert parse_form("y*z^2", 2) == Form(2, 3, {(1, 2): 1})
    with pytest.raises(FormParseError):
        parse_form("x*z", 2)


def test_dual_aliases():
    a = parse_form("a^2*b - 3*c^3", 3, DUAL)
    g = parse_form("α^2*β - 3*γ^3", 3, DUAL)
    assert a == g and a.ring == DUAL
    assert str(a) == "a^2*b - 3*c^3"


def test_whitespace_and_constants():
    assert parse_form("  x  *  y ^ 2 ") == parse_form("x*y^2")
    assert parse_form("7/2").coefficient((0, 0, 0)) == 7 / 2


def test_round_trip():
    rng = random.Random(18)
    for _ in range(300):
        nvars = rng.choice([2, 3])
        f = random_form(rng, nvars, rng.randint(0, 7), max_terms=6, rational=True)
        text = format_form(f)
        assert parse_form(text, nvars) == f
        assert format_form(parse_form(text, nvars)) == text
