"""
Chebyshev polynomials, exactly
==============================

Build T_n and U_n symbolically, then evaluate them at huge indices.
"""

from fractions import Fraction

from chebsurd import T, U, cheb, cheb_eval_big, cheb_eval_pair

# coefficient lists are low degree first
for n in range(6):
    print(f"T_{n} = {cheb(T, n)}    U_{n} = {cheb(U, n)}")

# composition: T_2(T_3(x)) is T_6(x)
print(cheb(T, 2)(cheb(T, 3)) == cheb(T, 6))

# evaluation at a rational point goes through t^n mod (t^2 - 2xt + 1),
# so the index can be far beyond what a polynomial could hold
v = cheb_eval_big(U, 10**5, 3)
print("U_100000(3) has", v.bit_length(), "bits")

half = cheb_eval_big(T, 40, Fraction(5, 2))
print("T_40(5/2) =", half)

# modular images are cheap at any size
p = 2**61 - 1
t_n, _ = cheb_eval_pair(T, 10**18, 3, modulus=p)
u_a, _ = cheb_eval_pair(U, 10**18 - 1, 3, modulus=p)
u_b, _ = cheb_eval_pair(U, 2 * 10**18 - 1, 3, modulus=p)
print("U_{2n-1} = 2 T_n U_{n-1} mod p at n = 10^18:", u_b == 2 * t_n * u_a % p)
