"""Rational approximations S_{n,d} of the root x - sqrt(x^2-1) of X^2 - 2xX + 1.

S_{n,d} can be built three ways, all returning the same reduced rational
function:

* :func:`s_series` sums U_{d-1}(T_{(d+1)^k}) / prod_{j<=k} U_d(T_{(d+1)^j}),
* :func:`s_recursive` iterates S_{k+1} = (U_{d-1} + S_k(T_{d+1})) / U_d,
* :func:`s_closed` is U_{N-2}/U_{N-1} with N = (d+1)^(n+1).

Evaluated values at rational x come from :func:`s_eval` (closed form with
fast Chebyshev evaluation) or :func:`s_eval_series` (the sum, using
T_{(d+1)^k} = T_{d+1} iterated k times).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chebyshev import T, U, cheb, cheb_eval_pair
from .errors import DegreeOverflow, DomainError, PoleError
from .kernel import Number, Poly, RatFunc, as_rat, ratfunc_make

DEGREE_GUARD = 2**14

_X = Poly.x()


def _check(n: int, d: int, guard: bool = True) -> int:
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    N = (d + 1) ** (n + 1)
    if guard and N > DEGREE_GUARD:
        raise DegreeOverflow(
            f"(d+1)^(n+1) = {N} exceeds the symbolic degree guard {DEGREE_GUARD}"
        )
    return N


def _inner_chebyshev(n: int, d: int) -> list[Poly]:
    """T_{(d+1)^k} for k = 0..n, each obtained from the previous by composing with T_{d+1}."""
    step = cheb(T, d + 1)
    out = [_X]
    for _ in range(n):
        out.append(step.compose(out[-1]))
    return out


def s_series(n: int, d: int) -> RatFunc:
    _check(n, d)
    u_prev, u_d = cheb(U, d - 1), cheb(U, d)
    num, den = Poly(), Poly.const(1)
    for inner in _inner_chebyshev(n, d):
        factor = u_d.compose(inner)
        # num/den + U_{d-1}(inner) / (den * factor)
        num = num * factor + u_prev.compose(inner)
        den = den * factor
    return ratfunc_make(num, den)


def s_recursive(n: int, d: int) -> RatFunc:
    _check(n, d)
    u_prev, u_d = cheb(U, d - 1), cheb(U, d)
    step = cheb(T, d + 1)
    s = ratfunc_make(u_prev, u_d)
    for _ in range(n):
        inner = s.compose(step)
        s = ratfunc_make(u_prev * inner.den + inner.num, u_d * inner.den)
    return s


def s_closed(n: int, d: int) -> RatFunc:
    N = _check(n, d)
    return ratfunc_make(cheb(U, N - 2), cheb(U, N - 1))


def s_index(n: int, d: int) -> int:
    """N = (d+1)^(n+1); S_{n,d} = U_{N-2}/U_{N-1}."""
    return _check(n, d, guard=False)


def s_eval(n: int, d: int, x) -> Number:
    """Exact S_{n,d}(x) from the closed form; no degree guard."""
    N = _check(n, d, guard=False)
    x = as_rat(x)
    num, den = cheb_eval_pair(U, N - 2, x)
    if den == 0:
        raise PoleError(f"U_{N - 1} vanishes at x = {x}")
    return _norm(Fraction(num) / Fraction(den))


def s_eval_series(n: int, d: int, x) -> Number:
    """Exact S_{n,d}(x) from the sum form, evaluating the inner polynomials numerically."""
    _check(n, d, guard=False)
    x = as_rat(x)
    u_prev, u_d, step = cheb(U, d - 1), cheb(U, d), cheb(T, d + 1)
    total = Fraction(0)
    prod = Fraction(1)
    y = x
    for k in range(n + 1):
        if k:
            y = step(y)
        f = u_d(y)
        if f == 0:
            raise PoleError(f"U_{d}(T_{(d + 1) ** k}(x)) vanishes at x = {x}")
        prod *= f
        total += Fraction(u_prev(y)) / prod
    return _norm(total)


def _norm(v: Fraction) -> Number:
    return v.numerator if v.denominator == 1 else v


def denominator_product(n: int, d: int) -> Poly:
    """prod_{j=0}^{n} U_d(T_{(d+1)^j}) as a polynomial."""
    _check(n, d)
    u_d = cheb(U, d)
    out = Poly.const(1)
    for inner in _inner_chebyshev(n, d):
        out = out * u_d.compose(inner)
    return out


def theorem1_residual(n: int, d: int) -> tuple[Poly, Poly]:
    """Both sides of S^2 - 2xS + 1 = 1/P^2 after clearing denominators.

    With S = num/den from the series construction and P the denominator
    product, returns ``((num^2 - 2x num den + den^2) * P^2, den^2)``; the
    identity holds exactly when the two polynomials are equal.
    """
    s = s_series(n, d)
    num, den = s.num, s.den
    lhs = num * num - 2 * (_X * num * den) + den * den
    p = denominator_product(n, d)
    return lhs * (p * p), den * den


def _abs_gt_one(x) -> Fraction:
    x = Fraction(as_rat(x))
    if abs(x) <= 1:
        raise DomainError(f"need |x| > 1, got x = {x}")
    return x


def gap_certificate(n: int, d: int, x) -> Number:
    """Exact value of S^2 - 2xS + 1 at x, namely 1/prod_j U_d(T_{(d+1)^j}(x))^2.

    Positive and shrinking to zero as n or d grows, which certifies that S_{n,d}(x)
    approaches the root of X^2 - 2xX + 1 nearest zero without leaving Q.
    """
    _check(n, d, guard=False)
    x = _abs_gt_one(x)
    u_d, step = cheb(U, d), cheb(T, d + 1)
    prod = Fraction(1)
    y = x
    for k in range(n + 1):
        if k:
            y = step(y)
        prod *= u_d(y)
    return _norm(1 / (prod * prod))


def quadratic_value(s, x) -> Number:
    """X^2 - 2xX + 1 at X = s."""
    s, x = Fraction(as_rat(s)), Fraction(as_rat(x))
    return _norm(s * s - 2 * x * s + 1)


@dataclass(frozen=True)
class SurdApprox:
    """S_{n,d}, either symbolic (RatFunc) or evaluated at a point."""

    n: int
    d: int
    value: RatFunc | Number
    x: Number | None = None

    @classmethod
    def symbolic(cls, n: int, d: int) -> "SurdApprox":
        return cls(n, d, s_closed(n, d))

    @classmethod
    def at(cls, n: int, d: int, x) -> "SurdApprox":
        x = as_rat(x)
        return cls(n, d, s_eval(n, d, x), x)
