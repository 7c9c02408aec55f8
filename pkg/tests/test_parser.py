import random

import pytest

from curveform.errors import ParseError
from curveform.freealg import ALPHABET, NcPoly
from curveform.parser import parse_expr
from curveform.printing import format_poly, format_word
from curveform.scalar import ONE, R, Scalar, curve_point_from_t

PT = curve_point_from_t(2)  # (q, p) = (3, 6)


def test_curve_relation():
    f = parse_expr("y^2 - x^2 - x^3", PT)
    assert f == NcPoly({"yy": ONE, "xx": -ONE, "xxx": -ONE})


def test_inverse_relation():
    f = parse_expr("a*a^-1 - 1", PT)
    assert f == NcPoly({"ag": ONE, "": -ONE})


def test_point_substitution():
    f = parse_expr("3*x - (1+3*q)*a + 1", PT)
    assert f == NcPoly({"x": Scalar(3), "a": Scalar(-10), "": ONE})


def test_r_and_rationals():
    f = parse_expr("1/2*r*x - 2/3", PT)
    assert f == NcPoly({"x": Scalar(0, "1/2"), "": Scalar("-2/3")})


def test_negative_powers_of_a():
    assert parse_expr("a^-3", PT) == NcPoly.word("ggg")
    assert parse_expr("x*a^-2*b", PT) == NcPoly.word("xggb")


def test_parenthesized_power():
    f = parse_expr("(x + y)^2", PT)
    assert f == NcPoly({"xx": ONE, "xy": ONE, "yx": ONE, "yy": ONE})


def test_leading_minus():
    assert parse_expr("-x + x", PT) == NcPoly.zero()


def test_p_substitution():
    assert parse_expr("p", PT) == NcPoly.scalar(Scalar(6))


class TestErrors:
    def test_position_reported(self):
        with pytest.raises(ParseError) as exc:
            parse_expr("x + + y", PT)
        assert exc.value.position == 4

    def test_expected_tokens(self):
        with pytest.raises(ParseError) as exc:
            parse_expr("x *", PT)
        assert "x" in exc.value.expected and "(" in exc.value.expected

    def test_negative_power_only_on_a(self):
        with pytest.raises(ParseError):
            parse_expr("x^-1", PT)

    def test_unknown_character(self):
        with pytest.raises(ParseError) as exc:
            parse_expr("x + z", PT)
        assert exc.value.position == 4

    def test_unbalanced_paren(self):
        with pytest.raises(ParseError):
            parse_expr("(x + y", PT)

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse_expr("x y", PT)


class TestPrinting:
    def test_format_word_powers(self):
        assert format_word("xxayy") == "x^2*a*y^2"
        assert format_word("gg") == "a^-2"
        assert format_word("") == "1"

    def test_format_poly(self):
        f = NcPoly({"aaa": Scalar(10), "xaa": -ONE})
        assert format_poly(f) == "10*a^3 - x*a^2"

    def test_round_trip_fixed(self):
        for text in ["b*b", "y^2 - x^2 - x^3", "3*x - 10*a + 1",
                     "-a*x*a^-2 - x*a^-1 - a^-1 + 10"]:
            f = parse_expr(text, PT)
            assert parse_expr(format_poly(f), PT) == f

    def test_round_trip_random(self):
        rng = random.Random(7)
        pool = [Scalar(1), Scalar(-1), Scalar("5/3"), R, Scalar(2, -3), Scalar(-2)]
        for _ in range(200):
            terms = {}
            for _ in range(rng.randint(1, 4)):
                w = "".join(rng.choice(ALPHABET) for _ in range(rng.randint(0, 6)))
                terms[w] = rng.choice(pool)
            f = NcPoly(terms)
            assert parse_expr(format_poly(f), PT) == f
