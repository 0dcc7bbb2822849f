from enum import Enum
from fractions import Fraction
from typing import Mapping, Tuple, Union
import attr
from pentaflip.errors import (ZeroDivisionRationalError, UnboundVariableError, SingularEvaluationError,
                              InvalidVariableError)
from pentaflip.symexpr.polynomial import Polynomial, Number, is_identifier, variables_of


class ArithKind(Enum):
    ADD = 1
    SUB = 2
    MUL = 3
    DIV = 4


Operand = Union['RationalFunction', int, Fraction]


@attr.s(auto_attribs=True, frozen=True)
class RationalFunction(object):
    """Exact multivariate rational function in canonical form.

    Never build one with the bare constructor; ``RationalFunction.fraction``
    cancels the gcd and fixes the denominator to a primitive integer polynomial
    with positive lex-leading coefficient, which makes equality structural.
    """
    numerator: Polynomial
    denominator: Polynomial

    @staticmethod
    def fraction(numerator: Polynomial, denominator: Polynomial) -> 'RationalFunction':
        if denominator.is_zero():
            raise ZeroDivisionRationalError("Division by the zero polynomial")
        if numerator.is_zero():
            return RationalFunction(Polynomial.zero(), Polynomial.constant(1))
        numerator, denominator = numerator.cancel(denominator)
        normalizer = denominator.content()
        if denominator.leading_coefficient() < 0:
            normalizer = -normalizer
        return RationalFunction(numerator.scale(1 / normalizer), denominator.scale(1 / normalizer))

    @staticmethod
    def constant(value: Union[int, Fraction]) -> 'RationalFunction':
        return RationalFunction.fraction(Polynomial.constant(value), Polynomial.constant(1))

    @staticmethod
    def variable(name: str) -> 'RationalFunction':
        if not is_identifier(name):
            raise InvalidVariableError("Not a valid variable name: '%s'" % name)
        return RationalFunction(Polynomial.variable(name), Polynomial.constant(1))

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_constant(self) -> bool:
        return self.numerator.is_constant() and self.denominator.is_constant()

    def variables(self) -> Tuple[str, ...]:
        return variables_of([self.numerator, self.denominator])

    def __add__(self, other: Operand) -> 'RationalFunction':
        return arith(ArithKind.ADD, self, _lift(other))

    def __radd__(self, other: Operand) -> 'RationalFunction':
        return arith(ArithKind.ADD, _lift(other), self)

    def __sub__(self, other: Operand) -> 'RationalFunction':
        return arith(ArithKind.SUB, self, _lift(other))

    def __rsub__(self, other: Operand) -> 'RationalFunction':
        return arith(ArithKind.SUB, _lift(other), self)

    def __mul__(self, other: Operand) -> 'RationalFunction':
        return arith(ArithKind.MUL, self, _lift(other))

    def __rmul__(self, other: Operand) -> 'RationalFunction':
        return arith(ArithKind.MUL, _lift(other), self)

    def __truediv__(self, other: Operand) -> 'RationalFunction':
        return arith(ArithKind.DIV, self, _lift(other))

    def __rtruediv__(self, other: Operand) -> 'RationalFunction':
        return arith(ArithKind.DIV, _lift(other), self)

    def __neg__(self) -> 'RationalFunction':
        return RationalFunction(-self.numerator, self.denominator)

    def __pow__(self, exponent: int) -> 'RationalFunction':
        return power(self, exponent)

    def to_string(self) -> str:
        return to_string(self)


def _lift(value: Operand) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction.constant(value)


ZERO = RationalFunction.constant(0)
ONE = RationalFunction.constant(1)


def arith(kind: ArithKind, f: RationalFunction, g: RationalFunction) -> RationalFunction:
    if kind == ArithKind.ADD or kind == ArithKind.SUB:
        other = g.numerator if kind == ArithKind.ADD else -g.numerator
        if f.denominator == g.denominator:
            return RationalFunction.fraction(f.numerator + other, f.denominator)
        return RationalFunction.fraction(f.numerator * g.denominator + other * f.denominator,
                                         f.denominator * g.denominator)
    if kind == ArithKind.MUL:
        return RationalFunction.fraction(f.numerator * g.numerator, f.denominator * g.denominator)
    if g.is_zero():
        raise ZeroDivisionRationalError("Division by the zero rational function")
    return RationalFunction.fraction(f.numerator * g.denominator, f.denominator * g.numerator)


def power(f: RationalFunction, exponent: int) -> RationalFunction:
    if exponent < 0:
        if f.is_zero():
            raise ZeroDivisionRationalError("Negative power of the zero rational function")
        return RationalFunction.fraction(f.denominator ** -exponent, f.numerator ** -exponent)
    return RationalFunction.fraction(f.numerator ** exponent, f.denominator ** exponent)


def eval_at(f: RationalFunction, assignment: Mapping[str, Number]) -> Number:
    """Value of f at the assignment; exact unless a float value is involved."""
    for name in f.variables():
        if name not in assignment:
            raise UnboundVariableError(name)
    values = {name: assignment[name] for name in f.variables()}
    denominator = f.denominator.evaluate(values)
    if denominator == 0:
        raise SingularEvaluationError(to_string(f))
    numerator = f.numerator.evaluate(values)
    if isinstance(numerator, float) or isinstance(denominator, float):
        return float(numerator) / float(denominator)
    return Fraction(numerator) / Fraction(denominator)


def substitute(f: RationalFunction, assignment: Mapping[str, Union[RationalFunction, int, Fraction]]) -> RationalFunction:
    """Exact partial specialization; variables missing from the assignment stay symbolic."""
    def _substitute_polynomial(p: Polynomial) -> RationalFunction:
        total = ZERO
        for monomial, coefficient in p.terms:
            term = RationalFunction.constant(coefficient)
            for name, exponent in monomial.exponents:
                value = _lift(assignment[name]) if name in assignment else RationalFunction.variable(name)
                term = term * power(value, exponent)
            total = total + term
        return total

    denominator = _substitute_polynomial(f.denominator)
    if denominator.is_zero():
        raise SingularEvaluationError(to_string(f))
    return _substitute_polynomial(f.numerator) / denominator


def is_laurent(f: RationalFunction) -> bool:
    return f.denominator.is_monomial()


def to_string(f: RationalFunction) -> str:
    numerator = f.numerator.to_string()
    if f.denominator.is_one():
        return numerator
    if len(f.numerator.terms) > 1:
        numerator = "(%s)" % numerator
    denominator = f.denominator.to_string()
    single_factor = f.denominator.is_monomial() and len(f.denominator.terms[0][0].exponents) == 1
    if not single_factor:
        denominator = "(%s)" % denominator
    return "%s/%s" % (numerator, denominator)
