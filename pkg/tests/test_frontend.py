import json
import random
from fractions import Fraction

import pytest

from abelcurves.equation import AbelEquation, element_from_json, element_to_json, load_equation
from abelcurves.errors import OutOfScopeError, ParseError, RingMismatchError
from abelcurves.frontend import POLY_GAUSSIAN, POLY_RATIONAL, RINGS, TRIG, parse_expression, render
from abelcurves.poly import Poly
from abelcurves.scalars import Gauss, format_scalar, parse_scalar, surd
from abelcurves.trig import TrigPoly

E1 = {"ring": "poly-rational", "A": "t^3+t", "B": "-(t^2+3*t+1)", "C": "1"}
E4 = {"ring": "trig", "A": "25/4*sin(t)+5/2*sin(2t)+1/4*sin(3t)",
      "B": "-(sin(2t)+4*sin(t))", "C": "sin(t)"}


def test_parse_examples():
    assert parse_expression("t^3 + t", POLY_RATIONAL) == Poly([0, 1, 0, 1])
    x = parse_expression("cos(2t) - 1/2*sin(t) + 3", TRIG)
    assert (x.a0, x.harmonic(1), x.harmonic(2)) == (3, (0, Fraction(-1, 2)), (1, 0))
    assert parse_expression("t - i", POLY_GAUSSIAN) == Poly([Gauss(0, -1), 1], "gaussian")


def test_grammar_variants():
    assert parse_expression("cos(2*t)", TRIG) == parse_expression("cos(2t)", TRIG)
    assert parse_expression("-(t+1)^2", POLY_RATIONAL) == Poly([-1, -2, -1])
    assert parse_expression("2*-t", POLY_RATIONAL) == Poly([0, -2])
    assert parse_expression("sin(t)^2 + cos(t)^2", TRIG) == TrigPoly(1)


@pytest.mark.parametrize("text, ring, cls, pos", [
    ("t +* 1", POLY_RATIONAL, ParseError, 3),
    ("cos(t)", POLY_RATIONAL, RingMismatchError, 0),
    ("t", TRIG, RingMismatchError, 0),
    ("t - i", POLY_RATIONAL, RingMismatchError, 4),
    ("cos(1/2*t)", TRIG, ParseError, 5),
    ("cos(1.5t)", TRIG, ParseError, 4),
    ("(t + 1", POLY_RATIONAL, ParseError, 6),
    ("", POLY_RATIONAL, ParseError, 0),
    ("1/0", POLY_RATIONAL, ParseError, 2),
])
def test_parse_errors(text, ring, cls, pos):
    with pytest.raises(cls) as info:
        parse_expression(text, ring)
    assert info.value.position == pos


def _random_value(rng, ring):
    def rat():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 7))

    def scalar():
        if ring == POLY_GAUSSIAN and rng.random() < 0.6:
            return Gauss(rat(), rat())
        return rat()

    n = rng.randint(0, 6)
    if ring == TRIG:
        return TrigPoly(rat(), [rat() for _ in range(n)], [rat() for _ in range(n)])
    field = "gaussian" if ring == POLY_GAUSSIAN else "rational"
    return Poly([scalar() for _ in range(n + 1)], field)


@pytest.mark.parametrize("ring", RINGS)
def test_render_round_trip(ring):
    rng = random.Random(ring)
    for _ in range(1000):
        x = _random_value(rng, ring)
        text = render(x)
        y = parse_expression(text, ring)
        assert y == x, text
        assert render(y) == text


@pytest.mark.parametrize("ring", RINGS)
def test_element_json_round_trip(ring):
    rng = random.Random(7)
    for _ in range(50):
        x = _random_value(rng, ring)
        assert element_from_json(json.loads(json.dumps(element_to_json(x))), ring) == x


@pytest.mark.parametrize("x, field", [
    (Fraction(-3, 7), "rational"), (Gauss(Fraction(1, 2), -3), "gaussian"),
    (Gauss(0, Fraction(2, 5)), "gaussian"), (surd(Fraction(3, 2), Fraction(1, 2), 5), "rational"),
])
def test_scalar_text_round_trip(x, field):
    assert parse_scalar(format_scalar(x), field) == x


def test_load_equation_examples():
    eq = load_equation(E1)
    assert isinstance(eq, AbelEquation) and eq.A.degree == 3
    eq4 = load_equation(json.dumps(E4))
    assert eq4.is_trig and eq4.degrees() == (3, 2, 1)
    with pytest.raises(OutOfScopeError, match="out-of-scope"):
        load_equation({"ring": "poly-rational", "A": "0", "B": "t", "C": "1"})


@pytest.mark.parametrize("A, B, C, word", [
    ("t", "0", "1", "Bernoulli"), ("t", "t", "0", "C = 0"), ("3", "t", "1", "deg"),
])
def test_delegated_cases(A, B, C, word):
    with pytest.raises(OutOfScopeError, match=word):
        load_equation({"ring": "poly-rational", "A": A, "B": B, "C": C})


def test_load_equation_from_path(tmp_path):
    path = tmp_path / "e1.json"
    path.write_text(json.dumps(E1))
    assert load_equation(path) == load_equation(E1)
