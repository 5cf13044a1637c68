"""Exact arithmetic in Q(v), where v = q^(1/6).

Laurent polynomials are stored densely as a lowest exponent plus a tuple of
coefficients (ints where possible, Fractions otherwise).  A RingScalar is a
fraction num/den kept in a canonical form: den is an ordinary monic
polynomial with nonzero constant term and gcd(num, den) = 1.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction]


class PoleAtOne(ArithmeticError):
    """Raised when a scalar has no finite value at q = 1."""


def _num(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _trim(lo: int, coeffs: Sequence[Number]) -> tuple[int, tuple[Number, ...]]:
    start = 0
    end = len(coeffs)
    while start < end and coeffs[start] == 0:
        start += 1
    while end > start and coeffs[end - 1] == 0:
        end -= 1
    if start == end:
        return 0, ()
    return lo + start, tuple(_num(c) for c in coeffs[start:end])


class LaurentPoly:
    """A Laurent polynomial in v with rational coefficients."""

    __slots__ = ("lo", "coeffs", "_hash")

    def __init__(self, lo: int = 0, coeffs: Sequence[Number] = ()):
        self.lo, self.coeffs = _trim(lo, coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, lo: int, coeffs: tuple[Number, ...]) -> LaurentPoly:
        p = object.__new__(cls)
        p.lo = lo
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def from_terms(cls, terms: Mapping[int, Number]) -> LaurentPoly:
        terms = {e: c for e, c in terms.items() if c != 0}
        if not terms:
            return ZERO_POLY
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(e, 0) for e in range(lo, hi + 1)])

    @classmethod
    def monomial(cls, exp: int, coeff: Number = 1) -> LaurentPoly:
        return cls(exp, (coeff,))

    @property
    def terms(self) -> dict[int, Number]:
        return {self.lo + i: c for i, c in enumerate(self.coeffs) if c != 0}

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.lo == 0 and self.coeffs == (1,)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.lo == other.lo and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.lo, self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms!r})"

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs, self.lo - lo):
            out[i] = c
        for i, c in enumerate(other.coeffs, other.lo - lo):
            out[i] += c
        return LaurentPoly(lo, out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.lo, tuple(-c for c in self.coeffs))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO_POLY
        if len(a) == 1 and a[0] == 1:
            return LaurentPoly._raw(self.lo + other.lo, b)
        if len(b) == 1 and b[0] == 1:
            return LaurentPoly._raw(self.lo + other.lo, a)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly(self.lo + other.lo, out)

    def scale(self, c: Number) -> LaurentPoly:
        if c == 0:
            return ZERO_POLY
        return LaurentPoly._raw(self.lo, tuple(_num(x * c) for x in self.coeffs))

    def shift(self, n: int) -> LaurentPoly:
        return LaurentPoly._raw(self.lo + n, self.coeffs)

    def star(self) -> LaurentPoly:
        """Substitute v -> 1/v."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(-self.hi, self.coeffs[::-1])

    def at_one(self) -> Number:
        return _num(sum(self.coeffs, Fraction(0)))


ZERO_POLY = LaurentPoly._raw(0, ())
ONE_POLY = LaurentPoly._raw(0, (1,))


# Dense ordinary polynomials over Q, lowest degree first, used only for gcd.

def _divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    lead = b[-1]
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = Fraction(a[-1]) / lead
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] -= c * y
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _exact_div(a: Sequence[Number], b: Sequence[Number]) -> list:
    q, r = _divmod(list(a), list(b))
    if r:
        raise ArithmeticError("inexact polynomial division")
    return [_num(c) for c in q]


def _gcd(a: Sequence[Number], b: Sequence[Number]) -> list:
    a, b = list(a), list(b)
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    lead = Fraction(a[-1])
    return [_num(c / lead) for c in a]


class RingScalar:
    """An element num/den of Q(v) in canonical form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentPoly | Number = 0, den: LaurentPoly | Number = 1):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly(0, (num,))
        if not isinstance(den, LaurentPoly):
            den = LaurentPoly(0, (den,))
        self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> RingScalar:
        s = object.__new__(cls)
        s.num = num
        s.den = den
        s._hash = None
        return s

    @classmethod
    def laurent(cls, terms: Mapping[int, Number]) -> RingScalar:
        return cls._raw(LaurentPoly.from_terms(terms), ONE_POLY)

    @classmethod
    def v(cls, n: int = 1) -> RingScalar:
        """The monomial v^n."""
        return cls._raw(LaurentPoly.monomial(n), ONE_POLY)

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def __bool__(self) -> bool:
        return bool(self.num.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RingScalar(other)
        if not isinstance(other, RingScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        return f"RingScalar({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)

    def __add__(self, other: RingScalar | Number) -> RingScalar:
        other = _coerce(other)
        if not self.num.coeffs:
            return other
        if not other.num.coeffs:
            return self
        if self.den.is_one() and other.den.is_one():
            return RingScalar._raw(self.num + other.num, ONE_POLY)
        if self.den == other.den:
            return RingScalar(self.num + other.num, self.den)
        return RingScalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RingScalar:
        return RingScalar._raw(-self.num, self.den)

    def __sub__(self, other: RingScalar | Number) -> RingScalar:
        return self + (-_coerce(other))

    def __rsub__(self, other: RingScalar | Number) -> RingScalar:
        return _coerce(other) - self

    def __mul__(self, other: RingScalar | Number) -> RingScalar:
        other = _coerce(other)
        if not self.num.coeffs or not other.num.coeffs:
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return RingScalar._raw(self.num * other.num, ONE_POLY)
        return RingScalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RingScalar:
        if not self.num.coeffs:
            raise ZeroDivisionError("division by zero scalar")
        return RingScalar(self.den, self.num)

    def __truediv__(self, other: RingScalar | Number) -> RingScalar:
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other: RingScalar | Number) -> RingScalar:
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int) -> RingScalar:
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def star(self) -> RingScalar:
        return RingScalar(self.num.star(), self.den.star())

    def eval_at_one(self) -> Number:
        d = self.den.at_one()
        if d == 0:
            raise PoleAtOne(f"{self} has a pole at v = 1")
        return _num(Fraction(self.num.at_one()) / d)


def _coerce(x: RingScalar | Number) -> RingScalar:
    if isinstance(x, RingScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return RingScalar(x)
    raise TypeError(f"cannot use {type(x).__name__} as a scalar")


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if not den.coeffs:
        raise ZeroDivisionError("zero denominator")
    if not num.coeffs:
        return ZERO_POLY, ONE_POLY
    # push the v-power of den into num; den now has nonzero constant term
    num = num.shift(-den.lo)
    d = list(den.coeffs)
    if len(d) > 1:
        g = _gcd(num.coeffs, d)
        if len(g) > 1:
            num = LaurentPoly(num.lo, _exact_div(num.coeffs, g))
            d = _exact_div(d, g)
    lead = d[-1]
    if lead != 1:
        inv = Fraction(1) / lead
        num = num.scale(inv)
        d = [_num(c * inv) for c in d]
    return num, LaurentPoly._raw(0, tuple(d))


ZERO = RingScalar._raw(ZERO_POLY, ONE_POLY)
ONE = RingScalar._raw(ONE_POLY, ONE_POLY)


def add(a: RingScalar, b: RingScalar) -> RingScalar:
    return a + b


def mul(a: RingScalar, b: RingScalar) -> RingScalar:
    return a * b


def neg(a: RingScalar) -> RingScalar:
    return -a


def div(a: RingScalar, b: RingScalar) -> RingScalar:
    return a / b


def star(a: RingScalar) -> RingScalar:
    return a.star()


def eval_at_one(a: RingScalar) -> Number:
    return a.eval_at_one()


@lru_cache(maxsize=None)
def qint(n: int) -> RingScalar:
    """The quantum integer [n] = sum of v^(3(n-1-2i)) for i < n."""
    if n == 0:
        return ZERO
    if n < 0:
        return -qint(-n)
    return RingScalar._raw(LaurentPoly(-3 * (n - 1), [1 if i % 6 == 0 else 0 for i in range(6 * (n - 1) + 1)]), ONE_POLY)


@lru_cache(maxsize=None)
def qfactorial(n: int) -> RingScalar:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    out = ONE
    for i in range(2, n + 1):
        out = out * qint(i)
    return out


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> RingScalar:
    """The quantum binomial coefficient [n choose k]."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"qbinom({n}, {k}) out of range")
    return qfactorial(n) / (qfactorial(k) * qfactorial(n - k))


def qprod(values: Iterable[int]) -> RingScalar:
    out = ONE
    for n in values:
        out = out * qint(n)
    return out


# canonical string form

def _integer_pair(s: RingScalar) -> tuple[LaurentPoly, LaurentPoly]:
    """Scale num and den to coprime integer coefficients with positive leading den."""
    from math import gcd, lcm

    denoms = [Fraction(c).denominator for c in s.num.coeffs + s.den.coeffs]
    m = lcm(*denoms) if denoms else 1
    num = [int(Fraction(c) * m) for c in s.num.coeffs]
    den = [int(Fraction(c) * m) for c in s.den.coeffs]
    g = gcd(*num, *den)
    return (
        LaurentPoly(s.num.lo, [c // g for c in num]),
        LaurentPoly(s.den.lo, [c // g for c in den]),
    )


def format_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.terms, reverse=True):
        c = p.terms[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = "v" if e == 1 else f"v^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_scalar(s: RingScalar) -> str:
    """Canonical text form, e.g. '(v^3 + v^-3)/(v^6 + 1)'."""
    if s.den.is_one() and all(isinstance(c, int) for c in s.num.coeffs):
        return f"({format_poly(s.num)})"
    num, den = _integer_pair(s)
    return f"({format_poly(num)})/({format_poly(den)})"


class ScalarSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at offset {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|(v)|(\[)|(\])|([-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.replace("−", "-")
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ScalarSyntaxError(f"unexpected character {text[pos:].lstrip()[0]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("v", "v", start))
        else:
            tokens.append(("op", m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _ScalarParser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def take(self, value: str | None = None) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        if value is not None and tok[1] != value:
            raise ScalarSyntaxError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> RingScalar:
        out = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> RingScalar:
        out = self.unary()
        while True:
            kind, val, _ = self.peek()
            if val == "*":
                self.take()
                out = out * self.unary()
            elif val == "/":
                self.take()
                out = out / self.unary()
            elif kind in ("int", "v") or val in ("(", "["):
                out = out * self.power()
            else:
                return out

    def unary(self) -> RingScalar:
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def exponent(self) -> int:
        sign = 1
        if self.peek()[1] in ("-", "+"):
            sign = -1 if self.take()[1] == "-" else 1
        kind, val, pos = self.take()
        if kind != "int":
            raise ScalarSyntaxError("expected integer exponent", pos)
        return sign * int(val)

    def power(self) -> RingScalar:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            base = base ** self.exponent()
        return base

    def atom(self) -> RingScalar:
        kind, val, pos = self.take()
        if kind == "int":
            return RingScalar(int(val))
        if kind == "v":
            return RingScalar.v(1)
        if val == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if val == "[":
            n = self.exponent()
            self.take("]")
            return qint(n)
        raise ScalarSyntaxError(f"unexpected {val or 'end of input'!r}", pos)


def parse_scalar(text: str) -> RingScalar:
    """Parse a scalar expression in v; accepts the canonical form and [n] for quantum integers."""
    p = _ScalarParser(text)
    out = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ScalarSyntaxError(f"trailing input {val!r}", pos)
    return out
