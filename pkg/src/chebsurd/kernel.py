"""Exact arithmetic kernel: dense univariate polynomials and rational functions.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`.
A :class:`Poly` stores its coefficients low degree first, so ``Poly([-1, 0, 4])``
is ``4x^2 - 1``. Coefficients may be ints or Fractions; a polynomial whose
coefficients are all integral is stored with plain ints, which makes the same
class serve both as an integer polynomial and as an element of Q[z].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import PoleError, ZeroDenominator

Number = Union[int, Fraction]


def _canon(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def as_rat(value) -> Number:
    """Coerce ints, Fractions and strings like ``"5/2"`` to an exact number."""
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, int):
        return value
    if isinstance(value, Rational):
        return _canon(Fraction(value.numerator, value.denominator))
    if isinstance(value, str):
        return _canon(Fraction(value.strip()))
    raise TypeError(f"cannot use {value!r} as an exact rational")


class Poly:
    """Immutable dense polynomial with exact coefficients.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_canon(c) for c in coeffs]
        n = len(cs)
        while n and not cs[n - 1]:
            n -= 1
        object.__setattr__(self, "coeffs", tuple(cs[:n]))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # constructors
    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "Poly":
        return cls([0] * k + [c])

    # basic queries
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Number:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Number:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    # ring operations
    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a number or a :class:`Poly`."""
        if isinstance(x, Poly):
            return self.compose(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _canon(acc) if isinstance(acc, Fraction) else acc

    def compose(self, q: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    # content and division
    def content(self) -> Number:
        """Nonnegative rational content; zero for the zero polynomial."""
        if not self.coeffs:
            return 0
        num = 0
        den = 1
        for c in self.coeffs:
            c = Fraction(c)
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return _canon(Fraction(num, den))

    def primitive(self) -> "Poly":
        """Integer polynomial with coprime coefficients and positive leading term."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return Poly(_canon(Fraction(a) / c) for a in self.coeffs)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division over Q."""
        if not other:
            raise ZeroDenominator("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        db = other.degree
        inv = Fraction(1) / Fraction(other.lc)
        if len(rem) <= db:
            return Poly(), self
        quo = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] * inv
            if c:
                quo[k - db] = c
                for j, bj in enumerate(other.coeffs):
                    rem[k - db + j] -= c * bj
        return Poly(quo), Poly(rem[:db])

    def __floordiv__(self, other):
        return self.divmod(_lift(other))[0]

    def __mod__(self, other):
        return self.divmod(_lift(other))[1]

    def pseudo_rem(self, other: "Poly") -> "Poly":
        """Remainder of ``lc(other)**(deg self - deg other + 1) * self`` by ``other``, over Z."""
        if not other:
            raise ZeroDenominator("division by the zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lcb = other.lc
        while len(rem) > db and rem:
            k = len(rem) - 1
            c = rem[k]
            rem = [lcb * r for r in rem]
            for j, bj in enumerate(other.coeffs):
                rem[k - db + j] -= c * bj
            rem = list(Poly(rem).coeffs)
        return Poly(rem)

    # display
    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if k == 0:
                body = str(a)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if a == 1 else f"{a}*{mono}" if isinstance(a, Fraction) else f"{a}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _lift(v):
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly.const(v)
    return NotImplemented


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_compose(p: Poly, q: Poly) -> Poly:
    """``p(q(x))`` by Horner's scheme in the polynomial ring."""
    return p.compose(q)


def poly_eval(p: Poly, x) -> Number:
    return p(as_rat(x))


def _integral(p: Poly) -> Poly:
    if p.is_integral():
        return p
    m = 1
    for c in p.coeffs:
        if isinstance(c, Fraction):
            m = lcm(m, c.denominator)
    return p * m


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd of two polynomials (over Q, normalized to Z[x]).

    Uses the primitive polynomial remainder sequence. ``gcd(0, 0)`` is 0.
    """
    a, b = _integral(a).primitive(), _integral(b).primitive()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        a, b = b, a.pseudo_rem(b).primitive()
    return a.primitive()


def _exact_quotient(a: Poly, b: Poly) -> Poly:
    q, r = a.divmod(b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


@dataclass(frozen=True)
class RatFunc:
    """Reduced quotient ``num/den`` of integer polynomials.

    Build with :func:`ratfunc_make`; the representative is unique: num and den
    have no common polynomial factor, their contents are coprime, and den has
    a positive leading coefficient.
    """

    num: Poly
    den: Poly

    def __call__(self, x):
        if isinstance(x, Poly):
            return self.compose(x)
        x = as_rat(x)
        d = self.den(x)
        if d == 0:
            raise PoleError(f"denominator vanishes at x = {x}")
        return _canon(Fraction(self.num(x)) / d)

    def compose(self, q: Poly) -> "RatFunc":
        return ratfunc_make(self.num.compose(q), self.den.compose(q))

    def __add__(self, other):
        other = _lift_rf(other)
        return ratfunc_make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_lift_rf(other))

    def __rsub__(self, other):
        return _lift_rf(other) - self

    def __mul__(self, other):
        other = _lift_rf(other)
        return ratfunc_make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift_rf(other)
        return ratfunc_make(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _lift_rf(other) / self

    def __str__(self):
        return f"({self.num}) / ({self.den})"


def _lift_rf(v) -> RatFunc:
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, Poly):
        return ratfunc_make(v, Poly.const(1))
    return ratfunc_make(Poly.const(as_rat(v)), Poly.const(1))


def ratfunc_make(num: Poly, den: Poly) -> RatFunc:
    if not den:
        raise ZeroDenominator("rational function with zero denominator")
    if not num:
        return RatFunc(Poly(), Poly.const(1))
    # clear rational coefficients jointly so the quotient is unchanged
    m = 1
    for c in num.coeffs + den.coeffs:
        if isinstance(c, Fraction):
            m = lcm(m, c.denominator)
    if m != 1:
        num, den = num * m, den * m
    g = poly_gcd(num, den)
    if g.degree > 0:
        num, den = _exact_quotient(num, g), _exact_quotient(den, g)
    c = gcd(num.content(), den.content())
    if den.lc < 0:
        c = -c
    num = Poly(x // c for x in num.coeffs)
    den = Poly(x // c for x in den.coeffs)
    return RatFunc(num, den)


def gen_binomial(a, k: int) -> Number:
    """Binomial coefficient with rational upper and any integer lower argument.

    For ``k >= 0`` this is ``a(a-1)...(a-k+1)/k!``. Negative ``k`` follows the
    conventions used for the Chebyshev coefficient formulas: ``C(-1, -1) = 1``,
    ``C(-1, -2) = -1`` and every other negative-``k`` value is 0.
    """
    a = as_rat(a)
    if k >= 0:
        num = Fraction(1)
        for i in range(k):
            num *= a - i
            num /= i + 1
        return _canon(num)
    if k == -1:
        return 1 if a == -1 else 0
    if k == -2:
        return -1 if a == -1 else 0
    return 0
