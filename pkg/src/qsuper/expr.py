"""Text expressions for algebra elements.

Grammar, whitespace insensitive:

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' int)*
    atom   := int | 'q' ['^' qexp] | gen | '(' expr ')'
    gen    := 'E' idx | 'F' idx | 'K' '[' int (',' int)* ']'
    qexp   := int | '(' int '/' int ')'

Generator indices are 1-based.  Division requires a scalar divisor and a
negative power requires a scalar or a single K-monomial, since nothing
else is invertible here.  ``render_element`` emits text inside the same
grammar, so rendering, parsing and rendering again is the identity.
"""

import re
from fractions import Fraction
from typing import List, Optional, Tuple

from .algebra import AlgebraElement, gen_e, gen_f, gen_k, scalar_element
from .rootdata import RootDatum
from .scalars import Scalar, render_scalar


class ExpressionError(ValueError):
    """A parse failure; the message includes the character position."""


_TOKEN = re.compile(r"(?P<int>\d+)|(?P<gen>[EF]\d+)|(?P<sym>[qK])|(?P<op>[-+*/^()\[\],])")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExpressionError(
                "syntax error at position %d: unexpected %r" % (pos, text[pos])
            )
        kind = m.lastgroup
        tokens.append((kind, m.group(), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, datum: RootDatum, text: str):
        self.datum = datum
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> Optional[Tuple[str, str, int]]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self) -> Tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ExpressionError(
                "syntax error at position %d: unexpected end of input" % len(self.text)
            )
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        tok = self.next()
        if tok[1] != value:
            raise ExpressionError(
                "syntax error at position %d: expected %r, found %r"
                % (tok[2], value, tok[1])
            )

    def at_op(self, *values: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == "op" and tok[1] in values

    # -- grammar rules -----------------------------------------------------

    def expr(self) -> AlgebraElement:
        negate = False
        if self.at_op("-"):
            self.next()
            negate = True
        out = self.term()
        if negate:
            out = -out
        while self.at_op("+", "-"):
            op = self.next()[1]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> AlgebraElement:
        out = self.factor()
        while self.at_op("*", "/"):
            _, op, pos = self.next()
            rhs = self.factor()
            if op == "*":
                out = out * rhs
            else:
                s = _pure_scalar(rhs)
                if s is None or s.is_zero():
                    raise ExpressionError(
                        "syntax error at position %d: the divisor must be a "
                        "nonzero scalar" % pos
                    )
                out = out * s.inverse()
        return out

    def factor(self) -> AlgebraElement:
        out = self.atom()
        while self.at_op("^"):
            pos = self.next()[2]
            n = self.signed_int()
            out = _power(out, n, pos)
        return out

    def signed_int(self) -> int:
        sign = 1
        if self.at_op("-"):
            self.next()
            sign = -1
        tok = self.next()
        if tok[0] != "int":
            raise ExpressionError(
                "syntax error at position %d: expected an integer" % tok[2]
            )
        return sign * int(tok[1])

    def atom(self) -> AlgebraElement:
        tok = self.next()
        kind, value, pos = tok
        if kind == "int":
            return scalar_element(self.datum, int(value))
        if kind == "gen":
            idx = int(value[1:])
            if not 1 <= idx <= self.datum.rank:
                raise ExpressionError(
                    "unknown generator index at position %d: %s has no "
                    "generator %d" % (pos, self.datum.descriptor, idx)
                )
            make = gen_e if value[0] == "E" else gen_f
            return make(self.datum, idx - 1)
        if kind == "sym" and value == "q":
            return scalar_element(self.datum, self.q_power(pos))
        if kind == "sym" and value == "K":
            return self.k_monomial(pos)
        if kind == "op" and value == "(":
            out = self.expr()
            self.expect(")")
            return out
        raise ExpressionError(
            "syntax error at position %d: unexpected %r" % (pos, value)
        )

    def q_power(self, pos: int) -> Scalar:
        if not self.at_op("^"):
            return self.datum.q(1)
        self.next()
        if self.at_op("("):
            self.next()
            a = self.signed_int()
            self.expect("/")
            tok = self.next()
            if tok[0] != "int":
                raise ExpressionError(
                    "syntax error at position %d: expected an integer" % tok[2]
                )
            self.expect(")")
            e = Fraction(a, int(tok[1]))
        else:
            e = Fraction(self.signed_int())
        try:
            return self.datum.q(e)
        except ValueError as exc:
            raise ExpressionError(
                "syntax error at position %d: %s" % (pos, exc)
            ) from exc

    def k_monomial(self, pos: int) -> AlgebraElement:
        self.expect("[")
        vec = [self.signed_int()]
        while self.at_op(","):
            self.next()
            vec.append(self.signed_int())
        self.expect("]")
        if len(vec) != self.datum.rank:
            raise ExpressionError(
                "K-exponent arity mismatch at position %d: expected %d "
                "entries, found %d" % (pos, self.datum.rank, len(vec))
            )
        return gen_k(self.datum, tuple(vec))


def _pure_scalar(elem: AlgebraElement) -> Optional[Scalar]:
    if elem.is_zero():
        return Scalar.zero()
    if len(elem.terms) != 1:
        return None
    m, c = next(iter(elem.terms.items()))
    if m.fword or m.eword or any(m.kexp):
        return None
    return c


def _power(elem: AlgebraElement, n: int, pos: int) -> AlgebraElement:
    if n >= 0:
        return elem**n
    s = _pure_scalar(elem)
    if s is not None:
        if s.is_zero():
            raise ExpressionError(
                "syntax error at position %d: zero has no negative power" % pos
            )
        return scalar_element(elem.datum, s**n)
    if len(elem.terms) == 1:
        m, c = next(iter(elem.terms.items()))
        if not m.fword and not m.eword:
            inv = gen_k(elem.datum, tuple(-x for x in m.kexp)).scale(c.inverse())
            return _power(inv, -n, pos) if n != -1 else inv
    raise ExpressionError(
        "syntax error at position %d: only scalars and K-monomials have "
        "negative powers" % pos
    )


def parse_expression(datum: RootDatum, text: str) -> AlgebraElement:
    """Parse text into a normal-form element of the algebra for datum."""
    parser = _Parser(datum, text)
    out = parser.expr()
    tok = parser.peek()
    if tok is not None:
        raise ExpressionError(
            "syntax error at position %d: unexpected %r" % (tok[2], tok[1])
        )
    return out


def render_element(elem: AlgebraElement) -> str:
    """Deterministic text form of an element, inside the parser's grammar."""
    if elem.is_zero():
        return "0"
    datum = elem.datum
    bits = []
    for m, c in sorted(elem.terms.items()):
        pieces = []
        sc = render_scalar(c, datum.D)
        has_body = bool(m.fword or m.eword or any(m.kexp))
        if sc != "1" or not has_body:
            pieces.append("(%s)" % sc if ("+" in sc or "-" in sc) else sc)
        pieces.extend("F%d" % (i + 1) for i in m.fword)
        if any(m.kexp):
            pieces.append("K[%s]" % ",".join(str(x) for x in m.kexp))
        pieces.extend("E%d" % (i + 1) for i in m.eword)
        bits.append("*".join(pieces))
    return " + ".join(bits)
