"""Vajda-type identities and auxiliary lemmas for Chebyshev polynomials as exact residuals.

Each identity is stored as two signed term lists (left and right side), so a
residual is ``sum(lhs) - sum(rhs)`` and is the zero polynomial whenever the
identity holds. Keeping the terms separate lets tests mutate single signs.
"""

from __future__ import annotations

import enum
import itertools
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from concurrent.futures.process import BrokenProcessPool
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .chebyshev import T, cheb
from .errors import DomainError
from .kernel import Poly

log = logging.getLogger(__name__)

_X = Poly.x()
_X2_MINUS_1 = Poly((-1, 0, 1))


def _T(n: int) -> Poly:
    return cheb(T, n)


def _U(n: int) -> Poly:
    return cheb("U", n)


class IdentityTag(enum.Enum):
    VajdaUU = "VajdaUU"
    VajdaTT = "VajdaTT"
    VajdaTU_U = "VajdaTU_U"
    VajdaTU_T = "VajdaTU_T"
    VajdaPell = "VajdaPell"
    LemUT = "LemUT"
    LemUU = "LemUU"
    Lem2TU = "Lem2TU"
    LemDouble = "LemDouble"
    LemCompose = "LemCompose"

    @classmethod
    def parse(cls, s) -> "IdentityTag":
        return s if isinstance(s, cls) else cls(str(s))


VAJDA_TAGS = tuple(t for t in IdentityTag if t.name.startswith("Vajda"))
LEMMA_TAGS = tuple(t for t in IdentityTag if t.name.startswith("Lem"))

Terms = list  # list[Poly]


@dataclass(frozen=True)
class _Identity:
    params: tuple[str, ...]
    check: Callable[[dict], str | None]  # returns a violated precondition, or None
    sides: Callable[..., tuple[Terms, Terms]]
    text: str


def _vajda_domain(p):
    if p["n"] < 1:
        return "n >= 1"
    if p["i"] < 0:
        return "i >= 0"
    if p["j"] < 0:
        return "j >= 0"
    return None


def _d_ge_1(p):
    return None if p["d"] >= 1 else "d >= 1"


def _lem2tu_domain(p):
    if p["n"] < 0:
        return "n >= 0"
    if not 0 <= p["d"] <= p["n"]:
        return "0 <= d <= n"
    return None


def _n_ge_1(p):
    return None if p["n"] >= 1 else "n >= 1"


def _compose_domain(p):
    if p["n"] < 2:
        return "n >= 2"
    if p["d"] < 1:
        return "d >= 1"
    return None


IDENTITIES: dict[IdentityTag, _Identity] = {
    IdentityTag.VajdaUU: _Identity(
        ("n", "i", "j"), _vajda_domain,
        lambda n, i, j: (
            [_U(n + i) * _U(n + j), -(_U(n - 1) * _U(n + 1 + i + j))],
            [_U(i) * _U(j)],
        ),
        "U_{n+i}U_{n+j} - U_{n-1}U_{n+1+i+j} = U_iU_j",
    ),
    IdentityTag.VajdaTT: _Identity(
        ("n", "i", "j"), _vajda_domain,
        lambda n, i, j: (
            [_T(n + i) * _T(n + j), -(_T(n - 1) * _T(n + 1 + i + j))],
            [-_X2_MINUS_1 * _U(i) * _U(j)],
        ),
        "T_{n+i}T_{n+j} - T_{n-1}T_{n+1+i+j} = (1-x^2)U_iU_j",
    ),
    IdentityTag.VajdaTU_U: _Identity(
        ("n", "i", "j"), _vajda_domain,
        lambda n, i, j: (
            [_T(n + i) * _U(n + j), -(_U(n - 1) * _T(n + 1 + i + j))],
            [_T(i) * _U(j)],
        ),
        "T_{n+i}U_{n+j} - U_{n-1}T_{n+1+i+j} = T_iU_j",
    ),
    IdentityTag.VajdaTU_T: _Identity(
        ("n", "i", "j"), _vajda_domain,
        lambda n, i, j: (
            [_T(n + i) * _U(n + j), -(_T(n - 1) * _U(n + 1 + i + j))],
            [-(_U(i) * _T(j + 2))],
        ),
        "T_{n+i}U_{n+j} - T_{n-1}U_{n+1+i+j} = -U_iT_{j+2}",
    ),
    IdentityTag.VajdaPell: _Identity(
        ("n", "i", "j"), _vajda_domain,
        lambda n, i, j: (
            [_T(n + i) * _T(n + j), -(_X2_MINUS_1 * _U(n - 1) * _U(n - 1 + i + j))],
            [_T(i) * _T(j)],
        ),
        "T_{n+i}T_{n+j} - (x^2-1)U_{n-1}U_{n-1+i+j} = T_iT_j",
    ),
    IdentityTag.LemUT: _Identity(
        ("d",), _d_ge_1,
        lambda d: ([_X * _U(d)], [_U(d - 1), _T(d + 1)]),
        "xU_d = U_{d-1} + T_{d+1}",
    ),
    IdentityTag.LemUU: _Identity(
        ("d",), _d_ge_1,
        lambda d: (
            [_U(d) * _U(d)],
            [_U(d - 1) * _U(d - 1), 2 * (_T(d + 1) * _U(d - 1)), Poly.const(1)],
        ),
        "U_d^2 = U_{d-1}^2 + 2T_{d+1}U_{d-1} + 1",
    ),
    IdentityTag.Lem2TU: _Identity(
        ("n", "d"), _lem2tu_domain,
        lambda n, d: ([2 * (_T(d) * _U(n))], [_U(n + d), _U(n - d)]),
        "2T_dU_n = U_{n+d} + U_{n-d}",
    ),
    IdentityTag.LemDouble: _Identity(
        ("n",), _n_ge_1,
        lambda n: ([_U(2 * n - 1)], [2 * (_T(n) * _U(n - 1))]),
        "U_{2n-1} = 2T_nU_{n-1}",
    ),
    IdentityTag.LemCompose: _Identity(
        ("n", "d"), _compose_domain,
        lambda n, d: (
            [_U((n - 1) * d - 1) * _U(n - 1).compose(_T(d))],
            [_U(n * d - 1) * _U(n - 2).compose(_T(d))],
        ),
        "U_{(n-1)d-1} U_{n-1}(T_d) = U_{nd-1} U_{n-2}(T_d)",
    ),
}


def _params_for(tag: IdentityTag, params: Mapping[str, int]) -> dict:
    ident = IDENTITIES[tag]
    missing = [k for k in ident.params if k not in params]
    if missing:
        raise DomainError(f"{tag.value}: missing parameter(s) {', '.join(missing)}")
    p = {k: int(params[k]) for k in ident.params}
    bad = ident.check(p)
    if bad:
        raise DomainError(f"{tag.value}: precondition {bad} violated by {p}")
    return p


def identity_sides(tag, params: Mapping[str, int]) -> tuple[Terms, Terms]:
    """Left and right side of an identity instance as lists of polynomial terms."""
    tag = IdentityTag.parse(tag)
    p = _params_for(tag, params)
    return IDENTITIES[tag].sides(**p)


def identity_residual(tag, params: Mapping[str, int]) -> Poly:
    """LHS - RHS of the identity instance; zero for every in-domain tuple."""
    lhs, rhs = identity_sides(tag, params)
    return sum(lhs, Poly()) - sum(rhs, Poly())


# ---------------------------------------------------------------------------
# sweeps

DEFAULT_BOUNDS: dict[IdentityTag, dict[str, int]] = {
    IdentityTag.VajdaUU: {"n": 6, "i": 4, "j": 4},
    IdentityTag.VajdaTT: {"n": 6, "i": 4, "j": 4},
    IdentityTag.VajdaTU_U: {"n": 6, "i": 4, "j": 4},
    IdentityTag.VajdaTU_T: {"n": 5, "i": 3, "j": 3},
    IdentityTag.VajdaPell: {"n": 6, "i": 4, "j": 4},
    IdentityTag.LemUT: {"d": 30},
    IdentityTag.LemUU: {"d": 30},
    IdentityTag.Lem2TU: {"n": 12, "d": 12},
    IdentityTag.LemDouble: {"n": 40},
    IdentityTag.LemCompose: {"n": 6, "d": 5},
}

_LOWER = {"n": 0, "i": 0, "j": 0, "d": 0}


def parameter_box(tag, bounds: Mapping[str, int]):
    """All in-domain parameter tuples with each parameter at most its bound."""
    tag = IdentityTag.parse(tag)
    ident = IDENTITIES[tag]
    unknown = set(bounds) - set(ident.params)
    if unknown:
        raise DomainError(f"{tag.value}: unknown bound(s) {sorted(unknown)}")
    missing = [k for k in ident.params if k not in bounds]
    if missing:
        raise DomainError(f"{tag.value}: missing bound(s) {missing}")
    for k, v in bounds.items():
        if int(v) < 0:
            raise DomainError(f"{tag.value}: bound {k} must be >= 0")
    ranges = [range(_LOWER[k], int(bounds[k]) + 1) for k in ident.params]
    for combo in itertools.product(*ranges):
        p = dict(zip(ident.params, combo))
        if ident.check(p) is None:
            yield p


@dataclass
class Counterexample:
    params: dict
    residual: Poly

    def sort_key(self):
        return tuple(sorted(self.params.items()))


@dataclass
class SweepReport:
    tag: IdentityTag
    bounds: dict
    checked: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def summary(self) -> str:
        bounds = ",".join(f"{k}<={v}" for k, v in self.bounds.items())
        status = "OK" if self.ok else "FAIL"
        return (
            f"{self.tag.value} [{bounds}] {status}: "
            f"{len(self.counterexamples)} counterexamples / {self.checked} tuples"
        )

    def to_text(self) -> str:
        lines = [
            f"{self.tag.value} {_fmt_params(c.params)} {c.residual.degree}"
            for c in self.counterexamples
        ]
        lines.append(self.summary())
        return "\n".join(lines) + "\n"

    def to_json_lines(self) -> str:
        rows = [
            {
                "type": "counterexample",
                "tag": self.tag.value,
                "params": c.params,
                "residual_degree": c.residual.degree,
                "residual": [str(v) for v in c.residual.coeffs],
            }
            for c in self.counterexamples
        ]
        rows.append(
            {
                "type": "summary",
                "tag": self.tag.value,
                "bounds": self.bounds,
                "checked": self.checked,
                "counterexamples": len(self.counterexamples),
            }
        )
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in rows)


def _fmt_params(p: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in p.items())


def _check_one(args):
    tag, p = args
    return p, identity_residual(tag, p)


def identity_sweep(tag, bounds: Mapping[str, int] | None = None, jobs: int = 1) -> SweepReport:
    """Check every tuple of a parameter box exhaustively.

    ``jobs > 1`` distributes the tuples over a process pool; the report is
    the same either way because counterexamples are sorted.
    """
    tag = IdentityTag.parse(tag)
    bounds = dict(DEFAULT_BOUNDS[tag] if bounds is None else bounds)
    tuples = list(parameter_box(tag, bounds))
    report = SweepReport(tag, bounds)
    work = [(tag, p) for p in tuples]
    results = None
    if jobs > 1 and len(tuples) > 1:
        try:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_check_one, work, chunksize=8))
        except (BrokenProcessPool, OSError) as e:
            log.warning("process pool unavailable (%s); checking serially", e)
    if results is None:
        results = [_check_one(w) for w in work]
    for p, r in results:
        report.checked += 1
        if r:
            report.counterexamples.append(Counterexample(p, r))
    report.counterexamples.sort(key=Counterexample.sort_key)
    return report


def cassini_residual(n: int) -> Poly:
    """U_n^2 - U_{n+1}U_{n-1} - 1, computed directly (n >= 1)."""
    if n < 1:
        raise DomainError("n >= 1")
    return _U(n) * _U(n) - _U(n + 1) * _U(n - 1) - 1
