"""
Rational approximations of x - sqrt(x^2 - 1)
============================================

The sums S_{n,d} collapse to U_{N-2}/U_{N-1} with N = (d+1)^(n+1), and
each one is a convergent of the continued fraction of the surd.
"""

from decimal import Decimal, getcontext
from fractions import Fraction

from chebsurd import (
    convergent_index,
    gap_certificate,
    quadratic_value,
    s_closed,
    s_eval,
    s_series,
    surd_expansion,
)

# the symbolic sum and the closed form are the same rational function
print(s_series(1, 2))
print(s_series(1, 2) == s_closed(1, 2))

x = 3
exp = surd_expansion(x, 20)
getcontext().prec = 60
root = x - Decimal(x * x - 1).sqrt()
print("cf of 3 - sqrt(8):", exp.cf, "period", exp.period)

for n, d in [(0, 1), (1, 1), (0, 2), (2, 1), (1, 2)]:
    s = s_eval(n, d, x)
    k = convergent_index(exp.cf, s)
    gap = gap_certificate(n, d, x)
    # gap is the value of X^2 - 2xX + 1 at the approximation
    assert quadratic_value(s, x) == gap
    err = root - Decimal(s.numerator) / Decimal(s.denominator)
    print(f"n={n} d={d}: convergent #{k}, r - S = {err:.3e}, gap 1/{1 / gap}")

# x need not be an integer
print(s_eval(2, 2, Fraction(5, 2)))
