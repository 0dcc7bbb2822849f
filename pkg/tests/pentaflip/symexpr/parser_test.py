import unittest
from fractions import Fraction
import pytest
from parameterized import parameterized
from pentaflip.errors import ExpressionSyntaxError, ZeroDivisionRationalError
from pentaflip.symexpr.parser import parse_expr
from pentaflip.symexpr.rational import RationalFunction, eval_at


def test_parse_ptolemy_label() -> None:
    f = parse_expr("(a*c + b*d)/x")
    assert f.to_string() == "(a*c + b*d)/x"
    assert f.variables() == ("a", "b", "c", "d", "x")


def test_parse_zero() -> None:
    assert parse_expr("0").is_zero()


def test_parse_cancels() -> None:
    assert parse_expr("(x^2 - 1)/(x - 1)").to_string() == "x + 1"


def test_precedence() -> None:
    assert parse_expr("a + b*c^2") == parse_expr("a + (b*(c^2))")
    assert parse_expr("-x^2") == -(parse_expr("x") ** 2)
    assert parse_expr("a - b - c") == parse_expr("a - (b + c)")
    assert parse_expr("a/b/c") == parse_expr("a/(b*c)")


def test_integer_literals() -> None:
    assert parse_expr("3/6") == RationalFunction.constant(Fraction(1, 2))
    assert eval_at(parse_expr("(2*x + 1)/3"), {"x": 4}) == 3


def test_whitespace_is_ignored() -> None:
    assert parse_expr("  a*b  ") == parse_expr("a*b")


class ParseErrorTest(unittest.TestCase):
    @parameterized.expand([
        ("a +* b", 3),
        ("a $ b", 2),
        ("(a + b", 6),
        ("", 0),
        ("2^x", 2),
        ("a b", 2),
        ("a + b)", 5),
    ])
    def test_syntax_error_position(self, text: str, position: int) -> None:
        with pytest.raises(ExpressionSyntaxError) as error:
            parse_expr(text)
        assert error.value.position == position

    @parameterized.expand([
        ("a/0",),
        ("a/(b - b)",),
        ("1/(x^2 - x*x)",),
    ])
    def test_division_by_zero(self, text: str) -> None:
        with pytest.raises(ZeroDivisionRationalError):
            parse_expr(text)
