import random
import threading
from fractions import Fraction

import pytest
import sympy

from chebsurd import chebyshev
from chebsurd.chebyshev import (
    T,
    U,
    charpoly_power,
    cheb,
    cheb_coeffs_binomial,
    cheb_compose_check,
    cheb_eval_big,
    cheb_eval_pair,
    cheb_eval_recurrence,
)
from chebsurd.errors import NegativeIndex
from chebsurd.kernel import Poly

z = sympy.Symbol("z")


def sympy_cheb(kind, n):
    f = sympy.chebyshevt_poly if kind is T else sympy.chebyshevu_poly
    return Poly(int(c) for c in reversed(sympy.Poly(f(n, z), z).all_coeffs()))


def test_cheb_examples():
    assert cheb(T, 0) == Poly([1])
    assert cheb(T, 1) == Poly([0, 1])
    assert cheb(U, 2) == Poly([-1, 0, 4])
    assert cheb(T, 3) == Poly([0, -3, 0, 4])
    assert cheb("U", 1) == Poly([0, 2])


@pytest.mark.parametrize("kind", [T, U])
def test_cheb_matches_sympy(kind):
    for n in list(range(30)) + [97, 200, 513, 600]:
        assert cheb(kind, n) == sympy_cheb(kind, n)


def test_negative_index():
    with pytest.raises(NegativeIndex):
        cheb(T, -1)
    with pytest.raises(NegativeIndex):
        cheb_compose_check(-1, 2)
    with pytest.raises(NegativeIndex):
        cheb_eval_big(U, -3, 2)
    with pytest.raises(NegativeIndex):
        cheb_coeffs_binomial(T, -1)


def test_compose_check_examples():
    assert not cheb_compose_check(2, 3)
    assert not cheb_compose_check(1, 7)
    assert not cheb_compose_check(4, 4)


def test_compose_check_grid():
    for n in range(13):
        for m in range(13):
            assert cheb_compose_check(n, m) == Poly(), (n, m)


def test_pell_instance():
    x2m1 = Poly([-1, 0, 1])
    for n in range(1, 61):
        t, u = cheb(T, n), cheb(U, n - 1)
        assert t * t - x2m1 * u * u == Poly([1]), n


def test_eval_big_examples():
    assert cheb_eval_big(U, 3, 2) == 56
    assert cheb_eval_big(T, 5, 2) == 362
    assert cheb_eval_big(U, 0, Fraction(7, 3)) == 1
    # recurrence oracle sequences at x = 2
    assert [cheb_eval_big(U, k, 2) for k in range(4)] == [1, 4, 15, 56]
    assert [cheb_eval_big(T, k, 2) for k in range(6)] == [1, 2, 7, 26, 97, 362]


@pytest.mark.parametrize("kind", [T, U])
def test_eval_big_agrees_with_polynomial(kind):
    rng = random.Random(7)
    xs = [Fraction(rng.randint(-40, 40), rng.randint(1, 15)) for _ in range(20)]
    for n in range(0, 201, 7):
        p = cheb(kind, n)
        for x in xs:
            assert cheb_eval_big(kind, n, x) == p(x), (n, x)


def test_eval_big_recurrence_at_huge_index():
    for x in (Fraction(3), Fraction(5, 2), Fraction(-7, 3)):
        for n in (10**4 + 1, 123457):
            u0 = cheb_eval_big(U, n - 1, x)
            u1, u2 = cheb_eval_pair(U, n, x)
            assert u2 == 2 * x * u1 - u0
            assert u1 == cheb_eval_big(U, n, x)


def test_eval_modular_is_image_of_exact():
    p = 2**61 - 1
    for kind in (T, U):
        for n in (0, 1, 2, 57, 1000):
            for x in (3, Fraction(5, 7)):
                exact = Fraction(cheb_eval_big(kind, n, x))
                expect = exact.numerator * pow(exact.denominator, -1, p) % p
                assert cheb_eval_big(kind, n, x, modulus=p) == expect


class Counted:
    """Integer wrapper that counts multiplications."""

    muls = 0

    def __init__(self, v):
        self.v = v

    def _w(self, o):
        return o.v if isinstance(o, Counted) else o

    def __add__(self, o):
        return Counted(self.v + self._w(o))

    __radd__ = __add__

    def __sub__(self, o):
        return Counted(self.v - self._w(o))

    def __rsub__(self, o):
        return Counted(self._w(o) - self.v)

    def __mul__(self, o):
        Counted.muls += 1
        return Counted(self.v * self._w(o))

    __rmul__ = __mul__


def test_charpoly_power_is_logarithmic_and_generic():
    n = 10**6
    Counted.muls = 0
    c0, c1 = charpoly_power(n, Counted(6), Counted(1), one=Counted(1), zero=Counted(0))
    assert Counted.muls <= 6 * n.bit_length()
    # generic ring result agrees with the integer result
    d0, d1 = charpoly_power(10**3, 6, 1)
    e0, e1 = charpoly_power(10**3, Counted(6), Counted(1), one=Counted(1), zero=Counted(0))
    assert (e0.v, e1.v) == (d0, d1)


def test_cheb_coeffs_binomial_examples():
    assert cheb_coeffs_binomial(T, 0) == Poly([1])
    assert cheb_coeffs_binomial(U, 4) == Poly([1, 0, -12, 0, 16])
    assert cheb_coeffs_binomial(T, 1) == Poly([0, 1])


def test_cheb_coeffs_binomial_low_and_high():
    for kind in (T, U):
        for n in list(range(20)) + [150, 200]:
            assert cheb_coeffs_binomial(kind, n) == cheb(kind, n)


def test_memo_cap_and_threads():
    chebyshev.set_memo_cap(16)
    try:
        assert cheb(U, 40) == sympy_cheb(U, 40)
        results = {}

        def work(k):
            results[k] = cheb(T, 10 + k)

        threads = [threading.Thread(target=work, args=(k,)) for k in range(6)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        for k, p in results.items():
            assert p == sympy_cheb(T, 10 + k)
    finally:
        chebyshev.set_memo_cap(512)


def test_rational_big_index_is_reduced():
    from math import gcd

    for x in (Fraction(5, 2), Fraction(-7, 6), Fraction(4, 9)):
        for kind in (T, U):
            v = cheb_eval_big(kind, 3000, x)
            assert v == cheb_eval_recurrence(kind, 3000, x)
            assert gcd(v.numerator, v.denominator) == 1 and v.denominator > 0
            assert v + 1 - 1 == v and Fraction(str(v)) == v
