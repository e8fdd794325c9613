"""Chebyshev polynomials T_n and U_n: symbolic, binomial-sum and fast evaluated forms."""

from __future__ import annotations

import enum
import threading
from fractions import Fraction

import gmpy2

from .errors import NegativeIndex
from .kernel import Poly, as_rat, gen_binomial

_X = Poly.x()
_TWO_X = Poly((0, 2))


class ChebKind(enum.Enum):
    FIRST = "T"
    SECOND = "U"

    @classmethod
    def parse(cls, s) -> "ChebKind":
        if isinstance(s, cls):
            return s
        key = str(s).strip().upper()
        for kind in cls:
            if key in (kind.value, kind.name):
                return kind
        raise ValueError(f"unknown Chebyshev kind {s!r}; use T or U")


T = ChebKind.FIRST
U = ChebKind.SECOND


class _ChebTable:
    """Lazily extended table of T_k, U_k for k below a cap; safe under threads."""

    def __init__(self, cap: int = 512):
        self.cap = cap
        self._lock = threading.Lock()
        self._rows = {
            T: [Poly.const(1), _X],
            U: [Poly.const(1), _TWO_X],
        }

    def get(self, kind: ChebKind, n: int) -> Poly:
        rows = self._rows[kind]
        if n < len(rows):
            return rows[n]
        if n < self.cap:
            with self._lock:
                while len(rows) <= n:
                    rows.append(_TWO_X * rows[-1] - rows[-2])
            return rows[n]
        # past the cap: continue the recurrence from the last two cached terms
        top = min(len(rows), self.cap) - 1
        if top < 1:
            prev, cur = rows[0], rows[1]
            top = 1
        else:
            prev, cur = rows[top - 1], rows[top]
        for _ in range(n - top):
            prev, cur = cur, _TWO_X * cur - prev
        return cur

    def clear(self):
        with self._lock:
            for rows in self._rows.values():
                del rows[2:]


_table = _ChebTable()


def set_memo_cap(cap: int) -> None:
    """Change how many low-index polynomials of each kind are memoized."""
    if cap < 2:
        raise ValueError("memo cap must be at least 2")
    _table.cap = cap
    _table.clear()


def cheb(kind, n: int) -> Poly:
    """T_n or U_n as an integer polynomial, via the three-term recurrence."""
    kind = ChebKind.parse(kind)
    if n < 0:
        raise NegativeIndex(f"Chebyshev index must be >= 0, got {n}")
    return _table.get(kind, n)


def cheb_u(n: int) -> Poly:
    """U_n with the internal convention U_{-1} = 0."""
    if n == -1:
        return Poly()
    return cheb(U, n)


def cheb_compose_check(n: int, m: int) -> Poly:
    """Residual T_{nm} - T_n(T_m(x)); the zero polynomial for all n, m >= 0."""
    if n < 0 or m < 0:
        raise NegativeIndex("indices must be >= 0")
    return cheb(T, n * m) - cheb(T, n).compose(cheb(T, m))


def cheb_coeffs_binomial(kind, n: int) -> Poly:
    """Build T_n or U_n from the explicit binomial-sum coefficient formulas."""
    kind = ChebKind.parse(kind)
    if n < 0:
        raise NegativeIndex(f"Chebyshev index must be >= 0, got {n}")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        sign = -1 if k & 1 else 1
        if kind is U:
            c = gen_binomial(n - k, k)
        else:
            c = Fraction(gen_binomial(n + 1 - k, k) - gen_binomial(n - 1 - k, k - 2), 2)
        coeffs[n - 2 * k] += sign * c * 2 ** (n - 2 * k)
    return Poly(coeffs)


# ---------------------------------------------------------------------------
# Fast evaluation
#
# For the recurrence X_{k+2} = a X_{k+1} - b X_k, write t^n = c1 t + c0 modulo
# t^2 - a t + b.  Then X_n = c1 X_1 + c0 X_0.  Chebyshev at x = p/q is
# handled by scaling: q^k U_k(p/q) obeys the recurrence with a = 2p, b = q^2.


def charpoly_power(n: int, a, b, one=1, zero=0, mod=None):
    """Return (c0, c1) with t^n = c1*t + c0 modulo t^2 - a*t + b.

    Works over any commutative ring whose elements support +, - and *;
    O(log n) ring multiplications by left-to-right binary powering.
    """
    if n < 0:
        raise NegativeIndex("exponent must be >= 0")
    c0, c1 = one, zero
    for bit in bin(n)[2:] if n else "":
        # square: (c0 + c1 t)^2
        s0 = c0 * c0
        s1 = c1 * c1
        m = c0 * c1
        c0 = s0 - b * s1
        c1 = m + m + a * s1
        if bit == "1":
            # multiply by t
            c0, c1 = zero - b * c1, c0 + a * c1
        if mod is not None:
            c0 %= mod
            c1 %= mod
    return c0, c1


def _scaled_setup(kind: ChebKind, x):
    """Integers (p, q, a, b, X0, X1) for the scaled recurrence at x = p/q."""
    x = Fraction(as_rat(x))
    p, q = x.numerator, x.denominator
    x1 = 2 * p if kind is U else p
    return p, q, 2 * p, q * q, 1, x1


def cheb_eval_pair(kind, n: int, x, modulus: int | None = None):
    """Exact (P_n(x), P_{n+1}(x)) for P = T or U, in O(log n) multiplications.

    With ``modulus`` the values are returned as residues modulo it (the
    denominator of ``x`` must then be invertible).
    """
    kind = ChebKind.parse(kind)
    if n < 0:
        raise NegativeIndex(f"Chebyshev index must be >= 0, got {n}")
    if modulus is not None:
        x = Fraction(as_rat(x))
        xm = x.numerator * pow(x.denominator, -1, modulus) % modulus
        a, b, x0 = 2 * xm % modulus, 1, 1
        x1 = a if kind is U else xm
        c0, c1 = charpoly_power(n, a, b, mod=modulus)
        v0 = (c0 * x0 + c1 * x1) % modulus
        x2 = (a * x1 - b * x0) % modulus
        v1 = (c0 * x1 + c1 * x2) % modulus
        return v0, v1
    p, q, a, b, x0, x1 = _scaled_setup(kind, x)
    if q == 1:
        a, b, x0, x1 = gmpy2.mpz(a), gmpy2.mpz(b), gmpy2.mpz(x0), gmpy2.mpz(x1)
        c0, c1 = charpoly_power(n, a, b, one=gmpy2.mpz(1), zero=gmpy2.mpz(0))
        x2 = a * x1 - b * x0
        return int(c0 * x0 + c1 * x1), int(c0 * x1 + c1 * x2)
    a, b = gmpy2.mpz(a), gmpy2.mpz(b)
    c0, c1 = charpoly_power(n, a, b, one=gmpy2.mpz(1), zero=gmpy2.mpz(0))
    x2 = a * x1 - b * x0
    qn = gmpy2.mpz(q) ** n
    return _reduced(c0 * x0 + c1 * x1, qn), _reduced(c0 * x1 + c1 * x2, qn * q)


def _reduced(num, den) -> Fraction:
    # math.gcd is quadratic and takes seconds at a million bits, so reduce
    # with GMP and skip Fraction's own normalization
    g = gmpy2.gcd(num, den)
    f = Fraction.__new__(Fraction)
    f._numerator, f._denominator = int(num // g), int(den // g)
    return f


def cheb_eval_big(kind, n: int, x, modulus: int | None = None):
    """Exact T_n(x) or U_n(x) at a rational point for very large n.

    Agrees with ``cheb(kind, n)(x)``; the cost is O(log n) big-integer
    multiplications rather than n polynomial steps.
    """
    return cheb_eval_pair(kind, n, x, modulus)[0]


def cheb_eval_recurrence(kind, n: int, x):
    """Reference evaluation by n steps of the three-term recurrence."""
    kind = ChebKind.parse(kind)
    if n < 0:
        raise NegativeIndex(f"Chebyshev index must be >= 0, got {n}")
    x = as_rat(x)
    prev, cur = 1, (2 * x if kind is U else x)
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur
