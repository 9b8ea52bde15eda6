"""Exact arithmetic in the coefficient field Q(v), where v is a formal root of q.

A Scalar is a reduced fraction of sparse integer polynomials in v, stored as
exponent -> coefficient dicts.  The ambient root datum fixes a positive integer
D with v^D = q; Scalars themselves do not carry D, it only enters when powers
of q are created (q_power) or when values are rendered as text.

Invariant of the canonical form: the denominator is an ordinary polynomial in v
with nonzero constant term and positive leading coefficient; the numerator is a
Laurent polynomial sharing no polynomial factor and no integer content with the
denominator; zero is uniquely ({}, {0: 1}).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Union

Poly = Dict[int, int]

_ONE_POLY: Poly = {0: 1}


def _trim(p: Poly) -> Poly:
    return {e: c for e, c in p.items() if c}


def _padd(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        elif e in out:
            del out[e]
    return out


def _pneg(a: Poly) -> Poly:
    return {e: -c for e, c in a.items()}


def _pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            elif e in out:
                del out[e]
    return out


def _pshift(a: Poly, k: int) -> Poly:
    if k == 0:
        return dict(a)
    return {e + k: c for e, c in a.items()}


def _pscale(a: Poly, c: int) -> Poly:
    if c == 1:
        return dict(a)
    return {e: c * co for e, co in a.items()}


def _content(a: Poly) -> int:
    g = 0
    for c in a.values():
        g = gcd(g, abs(c))
        if g == 1:
            break
    return g or 1


def _leading(a: Poly) -> int:
    return a[max(a)]


def _primitive(a: Poly) -> Poly:
    c = _content(a)
    if _leading(a) < 0:
        c = -c
    if c == 1:
        return a
    return {e: co // c for e, co in a.items()}


def _pdiv_exact(a: Poly, b: Poly) -> Poly:
    """Divide a by b, assuming the division is exact over the integers."""
    if b == _ONE_POLY:
        return dict(a)
    rem = dict(a)
    db = max(b)
    lb = b[db]
    quot: Poly = {}
    while rem:
        da = max(rem)
        if da < db:
            raise ArithmeticError("inexact polynomial division")
        c, r = divmod(rem[da], lb)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quot[da - db] = c
        for e, co in b.items():
            e2 = e + da - db
            s = rem.get(e2, 0) - c * co
            if s:
                rem[e2] = s
            elif e2 in rem:
                del rem[e2]
    return quot


def _prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of a by b (both ordinary, b nonzero)."""
    rem = dict(a)
    db = max(b)
    lb = b[db]
    while rem and max(rem) >= db:
        da = max(rem)
        la = rem[da]
        rem = _padd(_pscale(rem, lb), _pscale(_pshift(b, da - db), -la))
    return rem


def _pgcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd of two nonzero ordinary polynomials, positive leading coefficient."""
    a = _primitive(a)
    b = _primitive(b)
    if max(a) < max(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else {})
    if _leading(a) < 0:
        a = _pneg(a)
    return a


class Scalar:
    """An element of Q(v) in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly, _normalized: bool = False):
        if _normalized:
            self.num = num
            self.den = den
        else:
            self.num, self.den = _normalize(num, den)
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Scalar":
        return _ZERO

    @staticmethod
    def one() -> "Scalar":
        return _ONE

    @staticmethod
    def from_int(n: int) -> "Scalar":
        if n == 0:
            return _ZERO
        return Scalar({0: n}, dict(_ONE_POLY), _normalized=True)

    @staticmethod
    def from_fraction(f: Union[Fraction, int]) -> "Scalar":
        f = Fraction(f)
        if f.numerator == 0:
            return _ZERO
        return Scalar({0: f.numerator}, {0: f.denominator}, _normalized=True)

    @staticmethod
    def v_power(e: int) -> "Scalar":
        return Scalar({e: 1}, dict(_ONE_POLY), _normalized=True)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == _ONE_POLY and self.den == _ONE_POLY

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        other = _coerce(other)
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == _ONE_POLY and other.den == _ONE_POLY:
            s = _padd(self.num, other.num)
            if not s:
                return _ZERO
            return Scalar(s, dict(_ONE_POLY), _normalized=True)
        return Scalar(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Scalar":
        return _coerce(other) + (-self)

    def __neg__(self) -> "Scalar":
        if not self.num:
            return self
        return Scalar(_pneg(self.num), dict(self.den), _normalized=True)

    def __mul__(self, other: "Scalar") -> "Scalar":
        other = _coerce(other)
        if not self.num or not other.num:
            return _ZERO
        if self.den == _ONE_POLY and other.den == _ONE_POLY:
            return Scalar(_pmul(self.num, other.num), dict(_ONE_POLY), _normalized=True)
        return Scalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other: "Scalar") -> "Scalar":
        other = _coerce(other)
        if not other.num:
            raise ZeroDivisionError("scalar division by zero")
        if not self.num:
            return _ZERO
        return Scalar(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other) -> "Scalar":
        return _coerce(other) / self

    def inverse(self) -> "Scalar":
        if not self.num:
            raise ZeroDivisionError("scalar division by zero")
        return Scalar(dict(self.den), dict(self.num))

    def __pow__(self, n: int) -> "Scalar":
        if n == 0:
            return _ONE
        base = self if n > 0 else self.inverse()
        result = _ONE
        k = abs(n)
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- equality ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_fraction(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (tuple(sorted(self.num.items())), tuple(sorted(self.den.items())))
            )
        return self._hash

    def __repr__(self) -> str:
        return f"Scalar({self.num!r}, {self.den!r})"

    def __bool__(self) -> bool:
        return bool(self.num)


def _normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    num = _trim(num)
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("scalar with zero denominator")
    if not num:
        return {}, dict(_ONE_POLY)
    vden = min(den)
    if vden:
        den = _pshift(den, -vden)
        num = _pshift(num, -vden)
    vnum = min(num)
    num0 = _pshift(num, -vnum) if vnum else num
    if len(den) > 1:
        g = _pgcd(num0, den)
        if g != _ONE_POLY:
            num0 = _pdiv_exact(num0, g)
            den = _pdiv_exact(den, g)
    c = gcd(_content(num0), _content(den))
    if _leading(den) < 0:
        c = -c
    if c != 1:
        num0 = {e: co // c for e, co in num0.items()}
        den = {e: co // c for e, co in den.items()}
    return _pshift(num0, vnum), den


def _coerce(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar.from_int(x)
    if isinstance(x, Fraction):
        return Scalar.from_fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")


_ZERO = Scalar({}, dict(_ONE_POLY), _normalized=True)
_ONE = Scalar(dict(_ONE_POLY), dict(_ONE_POLY), _normalized=True)

ZERO = _ZERO
ONE = _ONE


def field_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Exact field operation; op is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def q_power(e: Union[Fraction, int], D: int) -> Scalar:
    """q^e as a power of v, where v^D = q.  Requires D*e to be an integer."""
    t = Fraction(e) * D
    if t.denominator != 1:
        need = Fraction(e).denominator
        raise ValueError(
            f"q^({Fraction(e)}) is not representable with v^{D} = q; "
            f"requires D to be a multiple of {need}"
        )
    return Scalar.v_power(t.numerator)


def gauss_binomial(m: int, n: int, base: Scalar) -> Scalar:
    """The balanced Gauss binomial [m over n] at the given base.

    Computed as the product over i = 1..n of
    (base^(m-i+1) - base^(i-m-1)) / (base^i - base^(-i)).
    """
    if n < 0 or m < n:
        raise ValueError(f"gauss_binomial requires m >= n >= 0, got m={m}, n={n}")
    result = _ONE
    for i in range(1, n + 1):
        result = result * (base ** (m - i + 1) - base ** (i - m - 1))
        result = result / (base**i - base ** (-i))
    return result


def scal_sum(values: Iterable[Scalar]) -> Scalar:
    total = _ZERO
    for x in values:
        total = total + x
    return total


def scalar_to_json(s: Scalar) -> list:
    """Lossless form for cache files: exponent/coefficient pairs with the
    coefficients as decimal strings."""
    return [
        [[e, str(c)] for e, c in sorted(s.num.items())],
        [[e, str(c)] for e, c in sorted(s.den.items())],
    ]


def scalar_from_json(obj) -> Scalar:
    num = {int(e): int(c) for e, c in obj[0]}
    den = {int(e): int(c) for e, c in obj[1]}
    return Scalar(num, den, _normalized=True)


def render_scalar(s: Scalar, D: int) -> str:
    """Canonical text form, e.g. (q^2-1)/(q); negative v-powers are cleared
    into the displayed denominator so that output stays inside the CLI grammar."""
    if not s.num:
        return "0"
    shift = min(0, min(s.num))
    num = _pshift(s.num, -shift)
    den = _pshift(s.den, -shift)
    if den == _ONE_POLY:
        return _poly_str(num, D)
    return f"({_poly_str(num, D)})/({_poly_str(den, D)})"


def _power_str(e: int, D: int) -> str:
    f = Fraction(e, D)
    if f == 1:
        return "q"
    if f.denominator == 1:
        return f"q^{f.numerator}"
    return f"q^({f})"


def _poly_str(p: Poly, D: int) -> str:
    parts = []
    for e in sorted(p, reverse=True):
        c = p[e]
        if e == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = _power_str(e, D)
        else:
            body = f"{abs(c)}*{_power_str(e, D)}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if c > 0 else f"-{body}")
    return "".join(parts)
