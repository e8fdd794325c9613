"""
A Pascal-like triangle with alternating left edge
=================================================
"""

from chebsurd import SEQUENCES, l_via_f, lu_check, matrix_M, q_poly, sequences, triangle

tri = triangle(10)
print(tri.to_text())

# each entry is also a binomial sum that does not depend on x
print(l_via_f(7, 3, 0), l_via_f(7, 3, 11), tri.entry(7, 3))

# interpolating polynomials through the diagonals
for N in range(4):
    print(f"Q_{N} =", q_poly(N))

for name in SEQUENCES:
    print(name, sequences(name, 12))

# M[i][j] = l_{i+j,j} factors as L U with U binomial, so det M = 1
alpha = [(-1) ** i for i in range(8)]
print(matrix_M(alpha, 5).entries)
rep = lu_check(alpha, 8)
print("LU ok:", rep.ok, "leading determinants:", rep.leading_dets)
