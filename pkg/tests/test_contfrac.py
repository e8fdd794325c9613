from fractions import Fraction
from math import isqrt

import pytest

from chebsurd.chebyshev import U, cheb_eval_big
from chebsurd.contfrac import (
    CFrac,
    cf_eval,
    cf_theorem5,
    convergent_index,
    convergents,
    surd_expand,
    surd_expansion,
)
from chebsurd.errors import DomainError, MalformedCF
from chebsurd.surd import s_eval


def u_rec(n, x):
    a, b = 1, 2 * x
    for _ in range(n):
        a, b = b, 2 * x * b - a
    return a


def test_cf_eval_examples():
    assert cf_eval(CFrac((0, 3, 1))) == Fraction(1, 4)
    assert cf_eval([0, 3, 1, 2, 1]) == Fraction(4, 15)
    assert cf_eval([5]) == 5


def test_malformed():
    with pytest.raises(MalformedCF):
        cf_eval([0, 3, 0])
    with pytest.raises(MalformedCF):
        CFrac(())
    with pytest.raises(MalformedCF):
        convergents([1, -2])


def test_text_round_trip():
    for q in [(0, 3, 1, 2), (7,), (-2, 1, 5)]:
        cf = CFrac(q)
        assert CFrac.parse(str(cf)) == cf
    assert str(CFrac((0, 3, 1))) == "[0;3,1]"
    assert str(CFrac((5,))) == "[5]"
    with pytest.raises(MalformedCF):
        CFrac.parse("[0;3,,1]")


def test_cf_theorem5_examples():
    cf = cf_theorem5(0, 2)
    assert cf.quotients == (0, 3, 1) and cf_eval(cf) == Fraction(1, 4)
    cf = cf_theorem5(1, 2)
    assert cf.quotients == (0, 3, 1, 2, 1) and cf_eval(cf) == Fraction(4, 15)
    cf = cf_theorem5(2, 3)
    assert cf.quotients == (0, 5, 1, 4, 1, 4, 1) and cf_eval(cf) == Fraction(35, 204)


def test_cf_theorem5_domain():
    for x in (1, 0, -3):
        with pytest.raises(DomainError):
            cf_theorem5(1, x)


def test_structured_cf_grid():
    for x in range(2, 11):
        for n in range(41):
            assert cf_eval(cf_theorem5(n, x)) == Fraction(u_rec(n, x), u_rec(n + 1, x))


def test_surd_expand_examples():
    assert surd_expand(2, 6).quotients == (0, 3, 1, 2, 1, 2)
    assert surd_expand(3, 5).quotients == (0, 5, 1, 4, 1)
    assert surd_expand(2, 1).quotients == (0,)
    with pytest.raises(DomainError):
        surd_expand(1, 4)


@pytest.mark.parametrize("x", range(2, 11))
def test_surd_period(x):
    exp = surd_expansion(x, 50)
    q = exp.cf.quotients
    assert len(q) == 50
    assert q[:2] == (0, 2 * x - 1)
    assert all(a == (1 if k % 2 == 0 else 2 * (x - 1)) for k, a in enumerate(q[2:]))
    # detected from a (P, Q) revisit, not from the pattern
    assert exp.period == (1, 2 * (x - 1))
    assert exp.period_start == 2


@pytest.mark.parametrize("x", range(2, 7))
def test_convergents_bracket_the_surd(x):
    # r = x - sqrt(x^2-1) is irrational; compare p/q with r via integer arithmetic:
    # p/q < r  <=>  x q - p > sqrt(x^2-1) q  <=>  (xq - p)^2 > (x^2 - 1) q^2 with xq - p > 0
    def below(v):
        p, q = v.numerator, v.denominator
        return x * q - p > 0 and (x * q - p) ** 2 > (x * x - 1) * q * q

    cs = [Fraction(c) for c in convergents(surd_expand(x, 30))]
    for k, c in enumerate(cs):
        assert below(c) == (k % 2 == 0)


def test_convergents_examples():
    assert convergents([0, 3, 1, 2]) == [0, Fraction(1, 3), Fraction(1, 4), Fraction(3, 11)]
    assert convergents([0, 3, 1]) == [0, Fraction(1, 3), Fraction(1, 4)]
    assert convergents([7]) == [7]


def test_convergent_alternation():
    cs = [Fraction(c) for c in convergents(surd_expand(4, 25))]
    for k in range(len(cs) - 1):
        lo, hi = sorted((cs[k], cs[k + 1]))
        for later in cs[k + 2:]:
            assert lo < later < hi


def test_surd_state_invariants():
    exp = surd_expansion(7, 20)
    root = isqrt(48)
    for st in exp.states:
        assert st.Q != 0
        assert (st.D - st.P * st.P) % st.Q == 0
        assert 0 < root < 7


def test_convergent_membership():
    for x in range(2, 7):
        cf = surd_expand(x, 64)
        for d in (1, 2):
            for n in range(3):
                v = s_eval(n, d, x)
                N = (d + 1) ** (n + 1)
                assert convergent_index(cf, v) == 2 * N - 2


def test_convergent_index_missing():
    assert convergent_index([0, 3, 1], Fraction(2, 7)) is None


def test_big_index_consistency():
    # cf value for large n equals fast-evaluated ratio
    cf = cf_theorem5(300, 5)
    assert cf_eval(cf) == Fraction(cheb_eval_big(U, 300, 5), cheb_eval_big(U, 301, 5))
