import re
from fractions import Fraction
from functools import cmp_to_key, lru_cache, reduce
from math import gcd
from typing import Any, Dict, Iterable, List, Mapping, Set, Tuple, Union
import attr
from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import ring


Number = Union[Fraction, int, float]

_IDENTIFIER = re.compile(r'[A-Za-z_][A-Za-z0-9_]*\Z')


def is_identifier(name: str) -> bool:
    return _IDENTIFIER.match(name) is not None


@attr.s(auto_attribs=True, frozen=True)
class Monomial(object):
    # (variable, exponent) pairs sorted by variable name, exponents > 0
    exponents: Tuple[Tuple[str, int], ...] = ()

    @staticmethod
    def of(powers: Mapping[str, int]) -> 'Monomial':
        for name, exponent in powers.items():
            if exponent < 0:
                raise ValueError("Negative exponent %d for %s" % (exponent, name))
        return Monomial(tuple(sorted((name, e) for name, e in powers.items() if e != 0)))

    def as_dict(self) -> Dict[str, int]:
        return dict(self.exponents)

    def is_one(self) -> bool:
        return len(self.exponents) == 0

    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def variables(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.exponents)

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        powers = self.as_dict()
        for name, exponent in other.exponents:
            powers[name] = powers.get(name, 0) + exponent
        return Monomial(tuple(sorted(powers.items())))

    def to_string(self) -> str:
        return "*".join(name if e == 1 else "%s^%d" % (name, e) for name, e in self.exponents)


def compare_lex(first: Monomial, second: Monomial) -> int:
    """Lexicographic comparison on the global (alphabetical) variable order."""
    a = first.as_dict()
    b = second.as_dict()
    for name in sorted(set(a) | set(b)):
        ea = a.get(name, 0)
        eb = b.get(name, 0)
        if ea != eb:
            return 1 if ea > eb else -1
    return 0


_LEX_KEY = cmp_to_key(compare_lex)


@lru_cache(maxsize=None)
def _sympy_ring(names: Tuple[str, ...]) -> Any:
    return ring(",".join(names), QQ, lex)[0]


@attr.s(auto_attribs=True, frozen=True)
class Polynomial(object):
    """Sparse polynomial with Fraction coefficients.

    Terms are kept in descending lex order so that structural equality of two
    polynomials is tuple equality.
    """
    terms: Tuple[Tuple[Monomial, Fraction], ...] = ()

    @staticmethod
    def from_dict(terms: Mapping[Monomial, Number]) -> 'Polynomial':
        items = [(m, Fraction(c)) for m, c in terms.items() if c != 0]
        items.sort(key=lambda item: _LEX_KEY(item[0]), reverse=True)
        return Polynomial(tuple(items))

    @staticmethod
    def zero() -> 'Polynomial':
        return Polynomial()

    @staticmethod
    def constant(value: Number) -> 'Polynomial':
        return Polynomial.from_dict({Monomial(): Fraction(value)})

    @staticmethod
    def variable(name: str) -> 'Polynomial':
        return Polynomial.from_dict({Monomial(((name, 1),)): 1})

    def as_dict(self) -> Dict[Monomial, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return len(self.terms) == 0

    def is_constant(self) -> bool:
        return self.is_zero() or (len(self.terms) == 1 and self.terms[0][0].is_one())

    def is_one(self) -> bool:
        return self.is_constant() and self.constant_value() == 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> Fraction:
        return self.as_dict().get(Monomial(), Fraction(0))

    def leading_coefficient(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        return self.terms[0][1]

    def variables(self) -> Tuple[str, ...]:
        names: Set[str] = set()
        for monomial, _ in self.terms:
            names.update(monomial.variables())
        return tuple(sorted(names))

    def content(self) -> Fraction:
        """Positive rational c such that self / c has coprime integer coefficients."""
        if self.is_zero():
            return Fraction(0)
        numerators = reduce(gcd, (abs(c.numerator) for _, c in self.terms))
        denominators = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for _, c in self.terms))
        return Fraction(numerators, denominators)

    def scale(self, factor: Number) -> 'Polynomial':
        factor = Fraction(factor)
        if factor == 0:
            return Polynomial.zero()
        return Polynomial(tuple((m, c * factor) for m, c in self.terms))

    def __neg__(self) -> 'Polynomial':
        return self.scale(-1)

    def __add__(self, other: 'Polynomial') -> 'Polynomial':
        result = self.as_dict()
        for monomial, coefficient in other.terms:
            result[monomial] = result.get(monomial, Fraction(0)) + coefficient
        return Polynomial.from_dict(result)

    def __sub__(self, other: 'Polynomial') -> 'Polynomial':
        return self + (-other)

    def __mul__(self, other: 'Polynomial') -> 'Polynomial':
        result: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = m1 * m2
                result[m] = result.get(m, Fraction(0)) + c1 * c2
        return Polynomial.from_dict(result)

    def __pow__(self, exponent: int) -> 'Polynomial':
        if exponent < 0:
            raise ValueError("Polynomials only have nonnegative powers")
        result = Polynomial.constant(1)
        base = self
        while exponent > 0:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def evaluate(self, values: Mapping[str, Number]) -> Number:
        total: Number = Fraction(0)
        for monomial, coefficient in self.terms:
            term: Number = coefficient
            for name, exponent in monomial.exponents:
                term = term * values[name] ** exponent
            total = total + term
        return total

    def cancel(self, other: 'Polynomial') -> Tuple['Polynomial', 'Polynomial']:
        """Divide self and other by their gcd, returning the two cofactors."""
        if self.is_constant() or other.is_constant():
            return self, other
        names = tuple(sorted(set(self.variables()) | set(other.variables())))
        _, cofactor_self, cofactor_other = self._to_sympy(names).cofactors(other._to_sympy(names))
        return _from_sympy(cofactor_self, names), _from_sympy(cofactor_other, names)

    def _to_sympy(self, names: Tuple[str, ...]) -> Any:
        index = {name: i for i, name in enumerate(names)}
        data = {}
        for monomial, coefficient in self.terms:
            vector = [0] * len(names)
            for name, exponent in monomial.exponents:
                vector[index[name]] = exponent
            data[tuple(vector)] = QQ(coefficient.numerator, coefficient.denominator)
        return _sympy_ring(names).from_dict(data)

    def to_string(self) -> str:
        if self.is_zero():
            return "0"
        parts: List[str] = []
        for i, (monomial, coefficient) in enumerate(self.terms):
            magnitude = abs(coefficient)
            if monomial.is_one():
                body = _format_fraction(magnitude)
            elif magnitude == 1:
                body = monomial.to_string()
            else:
                body = "%s*%s" % (_format_fraction(magnitude), monomial.to_string())
            if i == 0:
                parts.append("-" + body if coefficient < 0 else body)
            else:
                parts.append(("- " if coefficient < 0 else "+ ") + body)
        return " ".join(parts)


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def _from_sympy(poly: Any, names: Tuple[str, ...]) -> Polynomial:
    terms: Dict[Monomial, Fraction] = {}
    for vector, coefficient in poly.items():
        monomial = Monomial(tuple((name, e) for name, e in zip(names, vector) if e != 0))
        terms[monomial] = Fraction(int(coefficient.numerator), int(coefficient.denominator))
    return Polynomial.from_dict(terms)


def variables_of(polynomials: Iterable[Polynomial]) -> Tuple[str, ...]:
    names: Set[str] = set()
    for p in polynomials:
        names.update(p.variables())
    return tuple(sorted(names))
