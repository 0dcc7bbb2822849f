import re
from typing import List
import attr
from pentaflip.errors import ExpressionSyntaxError, ZeroDivisionRationalError
from pentaflip.symexpr.rational import RationalFunction, power


# expr   := term (('+'|'-') term)*
# term   := unary (('*'|'/') unary)*
# unary  := '-' unary | factor
# factor := base ('^' uint)?
# base   := identifier | uint | '(' expr ')'
_TOKEN_RE = re.compile(r'\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))')


@attr.s(auto_attribs=True, frozen=True)
class _Token(object):
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN_RE.match(text, position)
        if match is None:
            stripped = len(text[position:]) - len(text[position:].lstrip())
            raise ExpressionSyntaxError("Unexpected character '%s'" % text[position + stripped], position + stripped)
        kind = match.lastgroup
        assert kind is not None
        tokens.append(_Token(kind=kind, text=match.group(kind), position=match.start(kind)))
        position = match.end()
    tokens.append(_Token(kind="end", text="", position=len(text)))
    return tokens


class _Parser(object):
    def __init__(self, text: str) -> None:
        self._tokens = _tokenize(text)
        self._index = 0

    def _peek(self) -> _Token:
        return self._tokens[self._index]

    def _next(self) -> _Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _at_op(self, *ops: str) -> bool:
        token = self._peek()
        return token.kind == "op" and token.text in ops

    def parse(self) -> RationalFunction:
        result = self._expr()
        token = self._peek()
        if token.kind != "end":
            raise ExpressionSyntaxError("Unexpected '%s'" % token.text, token.position)
        return result

    def _expr(self) -> RationalFunction:
        result = self._term()
        while self._at_op("+", "-"):
            op = self._next()
            rhs = self._term()
            result = result + rhs if op.text == "+" else result - rhs
        return result

    def _term(self) -> RationalFunction:
        result = self._unary()
        while self._at_op("*", "/"):
            op = self._next()
            rhs = self._unary()
            if op.text == "*":
                result = result * rhs
            else:
                if rhs.is_zero():
                    raise ZeroDivisionRationalError("Division by zero at position %d" % op.position)
                result = result / rhs
        return result

    def _unary(self) -> RationalFunction:
        if self._at_op("-"):
            self._next()
            return -self._unary()
        return self._factor()

    def _factor(self) -> RationalFunction:
        base = self._base()
        if self._at_op("^"):
            self._next()
            token = self._next()
            if token.kind != "number":
                raise ExpressionSyntaxError("Expected an unsigned integer exponent", token.position)
            return power(base, int(token.text))
        return base

    def _base(self) -> RationalFunction:
        token = self._next()
        if token.kind == "number":
            return RationalFunction.constant(int(token.text))
        if token.kind == "name":
            return RationalFunction.variable(token.text)
        if token.kind == "op" and token.text == "(":
            inner = self._expr()
            closing = self._next()
            if closing.kind != "op" or closing.text != ")":
                raise ExpressionSyntaxError("Expected ')'", closing.position)
            return inner
        if token.kind == "end":
            raise ExpressionSyntaxError("Unexpected end of expression", token.position)
        raise ExpressionSyntaxError("Unexpected '%s'" % token.text, token.position)


def parse_expr(text: str) -> RationalFunction:
    return _Parser(text).parse()
