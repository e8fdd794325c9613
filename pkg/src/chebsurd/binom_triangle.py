"""The binomial sum f(a,d,n)_x, the Pascal-like triangle l_{i,j} and related objects.

``f(a, d, n)_x = sum_{k=0}^{d-n} C(a+d+x-k, k) C(d+k-x, d-n-k)`` does not depend
on x. Since d may be any rational while d - n must be a nonnegative integer,
the sum is parameterized here by ``m = d - n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DomainError, UnknownSequence
from .kernel import Number, Poly, as_rat, gen_binomial


@dataclass(frozen=True)
class FParams:
    a: Number
    d: Number
    m: int
    x: Number = 0

    def __post_init__(self):
        for name in ("a", "d", "x"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))
        if int(self.m) != self.m or self.m < 0:
            raise DomainError(f"m = d - n must be a nonnegative integer, got {self.m}")
        object.__setattr__(self, "m", int(self.m))

    @property
    def n(self) -> Number:
        return self.d - self.m

    def with_(self, **kw) -> "FParams":
        vals = dict(a=self.a, d=self.d, m=self.m, x=self.x)
        vals.update(kw)
        return FParams(**vals)


def _binom(a, k: int) -> Fraction:
    # k >= 0 throughout the sum, so the ordinary falling-factorial binomial applies
    return Fraction(gen_binomial(a, k))


def f_eval(p: FParams) -> Number:
    a, d, m, x = p.a, p.d, p.m, p.x
    total = Fraction(0)
    for k in range(m + 1):
        total += _binom(a + d + x - k, k) * _binom(d + k - x, m - k)
    return total.numerator if total.denominator == 1 else total


def f_identity_residuals(p: FParams) -> tuple[Number, Number, Number]:
    """Residuals of the three shift identities satisfied by f.

    1. f(a,d,n)_x - f(a-2c, d+c, n+c)_{x+c} with c = a/2,
    2. f(a,d,n)_x - f(a-1,d,n)_x - f(a-1,d,n+1)_{x-1},
    3. f(a,d,n)_x - f(a-1,d,n)_{x+1} - f(a-1,d,n+1)_{x+1}.

    Raising n by one lowers m by one, so the last two need m >= 1.
    """
    if p.m < 1:
        raise DomainError("the shift identities need m = d - n >= 1")
    base = Fraction(f_eval(p))
    c = Fraction(p.a) / 2
    r1 = base - f_eval(p.with_(a=p.a - 2 * c, d=p.d + c, x=p.x + c))
    r2 = base - f_eval(p.with_(a=p.a - 1)) - f_eval(p.with_(a=p.a - 1, m=p.m - 1, x=p.x - 1))
    r3 = base - f_eval(p.with_(a=p.a - 1, x=p.x + 1)) - f_eval(
        p.with_(a=p.a - 1, m=p.m - 1, x=p.x + 1)
    )
    return tuple(r.numerator if r.denominator == 1 else r for r in (r1, r2, r3))


# ---------------------------------------------------------------------------
# the triangle


@dataclass(frozen=True)
class TriArray:
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij) -> int:
        i, j = ij
        if 0 <= i < len(self.rows) and 0 <= j <= i:
            return self.rows[i][j]
        if 0 <= i < len(self.rows):
            return 0
        raise IndexError(f"row {i} not built")

    def __len__(self):
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        """l_{i,j}, reading entries outside 0 <= j <= i as 0."""
        return self[i, j]

    def to_text(self) -> str:
        return "".join(" ".join(map(str, r)) + "\n" for r in self.rows)


def triangle(rows: int) -> TriArray:
    """Rows 0..rows-1 of l: l_{i,0} = (-1)^i, l_{i,i} = 1, Pascal's rule inside."""
    if rows < 1:
        raise DomainError("rows must be >= 1")
    out = [(1,)]
    for i in range(1, rows):
        prev = out[-1]
        row = [(-1) ** i] + [prev[j - 1] + prev[j] for j in range(1, i)] + [1]
        out.append(tuple(row))
    return TriArray(tuple(out))


def l_via_f(i: int, j: int, x=0) -> Number:
    """l_{i,j} as f(0, (i-1)/2, j-(i+1)/2)_x, for any rational x."""
    if i < 0 or not 0 <= j <= i:
        raise DomainError(f"need 0 <= j <= i, got i={i}, j={j}")
    return f_eval(FParams(0, Fraction(i - 1, 2), i - j, x))


def q_poly(N: int) -> Poly:
    """Q_N(z) = f(0, z/2, z/2 - N), interpolated through z = 0..N at x = 0.

    Returned as a polynomial with rational coefficients.
    """
    if N < 0:
        raise DomainError("N must be >= 0")
    zs = list(range(N + 1))
    ys = [Fraction(f_eval(FParams(0, Fraction(z, 2), N, 0))) for z in zs]
    result = Poly()
    for k, zk in enumerate(zs):
        basis = Poly.const(1)
        denom = Fraction(1)
        for j, zj in enumerate(zs):
            if j != k:
                basis = basis * Poly((-zj, 1))
                denom *= zk - zj
        result = result + basis * (ys[k] / denom)
    return result


def q_direct(N: int, z) -> Number:
    """Q_N(z) straight from the binomial sum."""
    return f_eval(FParams(0, Fraction(as_rat(z)) / 2, N, 0))


def binom_l_identity(n: int, k: int, tri: TriArray | None = None) -> int:
    """C(n,k) - l_{n,k} - 2 l_{n,k+1}; always zero."""
    if n < 0 or k < 0:
        raise DomainError("need n, k >= 0")
    if tri is None or len(tri) <= n:
        tri = triangle(n + 1)
    return comb(n, k) - tri.entry(n, k) - 2 * tri.entry(n, k + 1)


def power_identity_residual(n: int, tri: TriArray | None = None) -> Poly:
    """x^n - (-1)^n - (x+1) sum_{k=1}^n l_{n,k} (x-1)^(k-1); the zero polynomial."""
    if n < 0:
        raise DomainError("need n >= 0")
    if tri is None or len(tri) <= n:
        tri = triangle(n + 1)
    xm1 = Poly((-1, 1))
    acc = Poly()
    power = Poly.const(1)
    for k in range(1, n + 1):
        acc = acc + power * tri.entry(n, k)
        power = power * xm1
    return Poly.monomial(n) - (-1) ** n - Poly((1, 1)) * acc


# ---------------------------------------------------------------------------
# M = L U


@dataclass(frozen=True)
class SqMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        e = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", e)
        if not e or any(len(r) != len(e) for r in e):
            raise DomainError("a square matrix of size >= 1 is required")

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "SqMatrix") -> "SqMatrix":
        n = self.size
        cols = list(zip(*other.entries))
        return SqMatrix(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.entries
        )

    def leading(self, k: int) -> "SqMatrix":
        return SqMatrix(tuple(r[:k] for r in self.entries[:k]))

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.size))

    def is_lower_unipotent(self) -> bool:
        n = self.size
        return all(
            self.entries[i][j] == (1 if i == j else self.entries[i][j] if i > j else 0)
            for i in range(n)
            for j in range(n)
        )

    def is_upper_unipotent(self) -> bool:
        return self.transpose().is_lower_unipotent()

    def transpose(self) -> "SqMatrix":
        return SqMatrix(tuple(zip(*self.entries)))


def _check_alpha(alpha: Sequence[int], size: int) -> list[int]:
    if size < 1:
        raise DomainError("size must be >= 1")
    alpha = list(alpha)
    if len(alpha) < size:
        raise DomainError(f"need at least {size} alpha values, got {len(alpha)}")
    if alpha[0] != 1:
        raise DomainError(f"alpha[0] must be 1, got {alpha[0]}")
    return alpha


def matrix_M(alpha: Sequence[int], size: int) -> SqMatrix:
    """M_{0,j} = 1, M_{i,0} = alpha_i, M_{i,j} = M_{i-1,j} + M_{i,j-1}."""
    alpha = _check_alpha(alpha, size)
    rows = [[1] * size]
    for i in range(1, size):
        row = [alpha[i]]
        for j in range(1, size):
            row.append(rows[i - 1][j] + row[j - 1])
        rows.append(row)
    return SqMatrix(rows)


def matrix_M_closed(alpha: Sequence[int], size: int) -> SqMatrix:
    """Same matrix from M_{i,j} = sum_k C(k+j-1, k) alpha_{i-k} (j > 0)."""
    alpha = _check_alpha(alpha, size)
    return SqMatrix(
        tuple(
            alpha[i] if j == 0 else sum(comb(k + j - 1, k) * alpha[i - k] for k in range(i + 1))
            for j in range(size)
        )
        for i in range(size)
    )


def matrix_L(alpha: Sequence[int], size: int) -> SqMatrix:
    """Unipotent lower-triangular L_{i,j} = M_{i-j,j}."""
    M = matrix_M(alpha, size)
    return SqMatrix(
        tuple(M[i - j, j] if i >= j else 0 for j in range(size)) for i in range(size)
    )


def matrix_binomial_U(size: int) -> SqMatrix:
    """Upper-triangular U_{i,j} = C(j, i)."""
    return SqMatrix(tuple(comb(j, i) for j in range(size)) for i in range(size))


@dataclass
class LUReport:
    size: int
    factorization_ok: bool
    closed_form_ok: bool
    mismatches: list[tuple[int, int]]
    leading_dets: list[int]

    @property
    def ok(self) -> bool:
        return self.factorization_ok and self.closed_form_ok and all(d == 1 for d in self.leading_dets)


def lu_check(alpha: Sequence[int], size: int) -> LUReport:
    """Verify M(alpha) = L(alpha) U entrywise and read off det M(k) = 1 for k <= size.

    Every leading k x k block of M equals the product of the leading blocks
    of L and U, both unipotent, so det M(k) is the product of their diagonals.
    """
    M = matrix_M(alpha, size)
    L = matrix_L(alpha, size)
    U = matrix_binomial_U(size)
    LU = L @ U
    mismatches = [(i, j) for i in range(size) for j in range(size) if M[i, j] != LU[i, j]]
    closed_ok = matrix_M_closed(alpha, size) == M
    dets = []
    unipotent = L.is_lower_unipotent() and U.is_upper_unipotent()
    for k in range(1, size + 1):
        det = 1
        for v in L.leading(k).diagonal() + U.leading(k).diagonal():
            det *= v
        dets.append(det if unipotent and not mismatches else None)
    return LUReport(size, not mismatches, closed_ok, mismatches, dets)


# ---------------------------------------------------------------------------
# integer sequences read off the triangle


def _row_weighted(weight):
    def seq(count: int) -> list[int]:
        tri = triangle(count)
        return [sum(weight(k) * tri.entry(n, k) for k in range(n + 1)) for n in range(count)]

    return seq


def _central(count: int) -> list[int]:
    tri = triangle(2 * count - 1)
    return [tri.entry(2 * n, n) for n in range(count)]


SEQUENCES = {
    "row_sums": _row_weighted(lambda k: 1),
    "central": _central,
    "weight_k_plus_1": _row_weighted(lambda k: k + 1),
    "weight_k_minus_1": _row_weighted(lambda k: k - 1 if k >= 2 else 0),
    "weight_2k_plus_1": _row_weighted(lambda k: 2 * k + 1),
}


def sequences(name: str, count: int) -> list[int]:
    """First ``count`` terms (from n = 0) of a named sequence built from the triangle."""
    try:
        fn = SEQUENCES[name]
    except KeyError:
        raise UnknownSequence(f"unknown sequence {name!r}; choose from {sorted(SEQUENCES)}") from None
    if count < 1:
        raise DomainError("count must be >= 1")
    return fn(count)


def to_bfile(values: Iterable[int], offset: int = 0) -> str:
    return "".join(f"{n} {v}\n" for n, v in enumerate(values, start=offset))


def read_bfile(path) -> dict[int, int]:
    """Parse ``n value`` lines, skipping blanks and ``#`` comments."""
    out = {}
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, v = line.split()[:2]
        out[int(n)] = int(v)
    return out


@dataclass
class BfileComparison:
    compared: int
    mismatch: tuple[int, int, int | None] | None  # (our index, ours, theirs)

    @property
    def ok(self) -> bool:
        return self.mismatch is None and self.compared > 0


def compare_bfile(values: Sequence[int], path, shift: int = 0) -> BfileComparison:
    """Compare values[n] with b-file entry n + shift; report the first mismatch.

    Indices absent from the file count as mismatches.
    """
    ref = read_bfile(path)
    compared = 0
    for n, v in enumerate(values):
        theirs = ref.get(n + shift)
        if theirs != v:
            return BfileComparison(compared, (n, v, theirs))
        compared += 1
    return BfileComparison(compared, None)
