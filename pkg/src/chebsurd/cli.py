"""Command-line front end: ``chebsurd {cheb,surd,verify,seq,bench}``.

Exit codes: 0 success, 1 domain error / counterexample / mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

import gmpy2

from . import binom_triangle as triangle, chebyshev, contfrac, identities, surd
from .chebyshev import ChebKind
from .errors import ChebsurdError, DegreeOverflow, DomainError
from .kernel import as_rat

FORMATS = ("plain", "json_lines", "csv", "bfile")


class UsageError(Exception):
    pass


def _int(text: str) -> int:
    """Integers, also written as ``10^9`` or ``2**20``."""
    s = text.strip().replace("**", "^")
    try:
        if "^" in s:
            base, exp = s.split("^", 1)
            return int(base) ** int(exp)
        return int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _rat(text: str):
    try:
        return as_rat(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _fmt(v) -> str:
    return str(v)


def _emit(obj: dict, fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "json_lines":
        out.write(json.dumps(obj) + "\n")
    elif fmt == "csv":
        out.write(",".join(obj) + "\n")
        out.write(",".join(_fmt(v) for v in obj.values()) + "\n")
    else:
        for k, v in obj.items():
            out.write(f"{k} {v}\n")


# ---------------------------------------------------------------------------
# cheb


def cmd_cheb(args) -> int:
    kind = ChebKind.parse(args.kind)
    poly = chebyshev.cheb(kind, args.n)
    coeffs = list(poly.coeffs) or [0]
    if args.format == "json_lines":
        print(json.dumps({"kind": kind.value, "n": args.n, "coeffs": coeffs}))
    elif args.format == "csv":
        print("degree,coeff")
        for k, c in enumerate(coeffs):
            print(f"{k},{c}")
    elif args.format == "bfile":
        sys.stdout.write(triangle.to_bfile(coeffs))
    else:
        print(" ".join(map(str, coeffs)))
    return 0


# ---------------------------------------------------------------------------
# surd

CF_INDEX_LIMIT = 10**6


def cmd_surd(args) -> int:
    x = args.x
    if abs(x) <= 1:
        raise DomainError(f"need |x| > 1, got x = {x}")
    n, d = args.n, args.d
    if args.method == "series":
        value = surd.s_eval_series(n, d, x)
    else:
        value = surd.s_eval(n, d, x)
    gap = surd.gap_certificate(n, d, x)
    report = {"x": str(x), "n": n, "d": d, "method": args.method, "value": str(value), "gap": str(gap)}
    if args.method == "cf":
        if Fraction(x).denominator != 1 or x < 2:
            raise DomainError(f"method cf needs an integer x >= 2, got x = {x}")
        N = surd.s_index(n, d)
        if N > CF_INDEX_LIMIT:
            raise DomainError(f"(d+1)^(n+1) = {N} is too large to expand as a continued fraction")
        cf = contfrac.surd_expand(int(x), 2 * N - 1)
        report["convergent"] = contfrac.convergent_index(cf, value)
        report["cf"] = _short_cf(cf)
    if args.format == "plain":
        print(f"value {report['value']}")
        print(f"gap {report['gap']}")
        if "convergent" in report:
            print(f"convergent {report['convergent']} of {report['cf']}")
    else:
        _emit(report, args.format)
    return 0


def _short_cf(cf, keep: int = 12) -> str:
    q = cf.quotients
    if len(q) <= keep:
        return str(cf)
    return str(contfrac.CFrac(q[:keep]))[:-1] + ",...]"


# ---------------------------------------------------------------------------
# verify


class _Suite:
    def __init__(self, name):
        self.name = name
        self.checked = 0
        self.failures: list[str] = []

    def check(self, ok: bool, what: str):
        self.checked += 1
        if not ok:
            self.failures.append(what)

    def summary(self) -> str:
        status = "OK" if not self.failures else "FAIL"
        return f"{self.name} {status}: {len(self.failures)} counterexamples / {self.checked} checks"


def _sweep_suite(args, tags, bounds_for) -> int:
    failed = 0
    for tag in tags:
        report = identities.identity_sweep(tag, bounds_for(tag), jobs=args.jobs)
        if args.format == "json_lines":
            text = report.to_json_lines().splitlines(keepends=True)
            sys.stderr.write("".join(text[:-1]))
            sys.stdout.write(text[-1])
        else:
            text = report.to_text().splitlines(keepends=True)
            sys.stderr.write("".join(text[:-1]))
            sys.stdout.write(text[-1])
        failed += not report.ok
    return 1 if failed else 0


def _verify_vajda(args) -> int:
    def bounds(tag):
        b = dict(identities.DEFAULT_BOUNDS[tag])
        if args.max_n is not None:
            b["n"] = args.max_n
        if args.max_ij is not None:
            b["i"] = b["j"] = args.max_ij
        return b

    return _sweep_suite(args, identities.VAJDA_TAGS, bounds)


def _verify_lemmas(args) -> int:
    def bounds(tag):
        b = dict(identities.DEFAULT_BOUNDS[tag])
        if args.max_n is not None and "n" in b:
            b["n"] = args.max_n
        if args.max_d is not None and "d" in b:
            b["d"] = args.max_d
        return b

    return _sweep_suite(args, identities.LEMMA_TAGS, bounds)


def _finish(args, suite: _Suite) -> int:
    for f in sorted(suite.failures):
        if args.format == "json_lines":
            print(json.dumps({"type": "counterexample", "suite": suite.name, "case": f}), file=sys.stderr)
        else:
            print(f"{suite.name} {f}", file=sys.stderr)
    if args.format == "json_lines":
        print(json.dumps({"type": "summary", "suite": suite.name, "checked": suite.checked,
                          "counterexamples": len(suite.failures)}))
    else:
        print(suite.summary())
    return 0 if not suite.failures else 1


def _verify_theorem1(args) -> int:
    suite = _Suite("theorem1")
    max_n = 2 if args.max_n is None else args.max_n
    max_d = 3 if args.max_d is None else args.max_d
    top = (max_d + 1) ** (max_n + 1)
    if top > surd.DEGREE_GUARD:
        raise UsageError(f"box reaches (d+1)^(n+1) = {top}, beyond the symbolic guard {surd.DEGREE_GUARD}")
    for n in range(max_n + 1):
        for d in range(1, max_d + 1):
            lhs, rhs = surd.theorem1_residual(n, d)
            suite.check(lhs == rhs, f"residual n={n},d={d}")
            a, b, c = surd.s_series(n, d), surd.s_recursive(n, d), surd.s_closed(n, d)
            suite.check(a == b == c, f"routes n={n},d={d}")
    return _finish(args, suite)


def _verify_theorem5(args) -> int:
    suite = _Suite("theorem5")
    max_n = 40 if args.max_n is None else args.max_n
    max_x = 10 if args.max_x is None else args.max_x
    for x in range(2, max_x + 1):
        u = [chebyshev.cheb_eval_recurrence("U", k, x) for k in range(max_n + 2)]
        for n in range(max_n + 1):
            v = contfrac.cf_eval(contfrac.cf_theorem5(n, x))
            suite.check(v == Fraction(u[n], u[n + 1]), f"cf n={n},x={x}")
        exp = contfrac.surd_expansion(x, 50)
        suite.check(exp.period == (1, 2 * (x - 1)) and exp.cf.quotients[:2] == (0, 2 * x - 1),
                    f"period x={x}")
    return _finish(args, suite)


def _verify_binom(args) -> int:
    suite = _Suite("binom")
    rng = random.Random(args.seed)
    for _ in range(args.count):
        a = Fraction(rng.randint(-30, 30), rng.randint(1, 6))
        d = Fraction(rng.randint(-30, 30), rng.randint(1, 6))
        m = rng.randint(0, 8)
        xs = {Fraction(rng.randint(-60, 60), rng.randint(1, 9)) for _ in range(5)}
        vals = {triangle.f_eval(triangle.FParams(a, d, m, x)) for x in xs}
        suite.check(len(vals) == 1, f"constancy a={a},d={d},m={m}")
        if m >= 1:
            p = triangle.FParams(a, d, m, min(xs))
            suite.check(triangle.f_identity_residuals(p) == (0, 0, 0), f"shifts a={a},d={d},m={m}")
    return _finish(args, suite)


def _verify_triangle(args) -> int:
    suite = _Suite("triangle")
    rows = 16 if args.rows is None else args.rows
    tri = triangle.triangle(rows + 1)
    for i in range(rows + 1):
        for j in range(i + 1):
            suite.check(triangle.l_via_f(i, j, Fraction(2 * i + 1, 3)) == tri.entry(i, j), f"l_via_f i={i},j={j}")
            suite.check(triangle.binom_l_identity(i, j, tri) == 0, f"binomial i={i},k={j}")
        suite.check(not triangle.power_identity_residual(i, tri), f"power n={i}")
    s = triangle.sequences("row_sums", rows + 1)
    for n in range(2, rows + 1):
        suite.check(s[n] == 2 * s[n - 2] + s[n - 1] == 2 * (s[n - 1] + (-1) ** n), f"row sums n={n}")
    return _finish(args, suite)


def _verify_lu(args) -> int:
    suite = _Suite("lu")
    size = 12 if args.size is None else args.size
    rng = random.Random(args.seed)
    alphas = [[(-1) ** i for i in range(size)]]
    for _ in range(args.count):
        alphas.append([1] + [rng.randint(-9, 9) for _ in range(size - 1)])
    for alpha in alphas:
        rep = triangle.lu_check(alpha, size)
        suite.check(rep.ok, f"alpha={alpha}")
    return _finish(args, suite)


SUITES = {
    "vajda": _verify_vajda,
    "lemmas": _verify_lemmas,
    "theorem1": _verify_theorem1,
    "theorem5": _verify_theorem5,
    "binom": _verify_binom,
    "triangle": _verify_triangle,
    "lu": _verify_lu,
}


def cmd_verify(args) -> int:
    try:
        return SUITES[args.suite](args)
    except DegreeOverflow as e:
        raise UsageError(str(e)) from e


# ---------------------------------------------------------------------------
# seq


def cmd_seq(args) -> int:
    values = triangle.sequences(args.name, args.count)
    if args.compare is not None:
        try:
            cmp = triangle.compare_bfile(values, args.compare, args.shift)
        except FileNotFoundError:
            print(f"error: b-file not found: {args.compare}", file=sys.stderr)
            return 1
        if cmp.ok:
            print(f"OK {cmp.compared} terms match {args.compare} (shift {args.shift})")
            return 0
        n, ours, theirs = cmp.mismatch
        print(
            f"MISMATCH at n={n} (b-file index {n + args.shift}): ours {ours}, "
            f"b-file {'missing' if theirs is None else theirs}",
        )
        return 1
    if args.format == "bfile":
        sys.stdout.write(triangle.to_bfile(values))
    elif args.format == "json_lines":
        print(json.dumps({"name": args.name, "values": values}))
    elif args.format == "csv":
        print("n,value")
        for n, v in enumerate(values):
            print(f"{n},{v}")
    else:
        print(" ".join(map(str, values)))
    return 0


# ---------------------------------------------------------------------------
# bench


def _timed(fn, repeat: int):
    best = None
    value = None
    for _ in range(max(1, repeat)):
        t0 = time.perf_counter_ns()
        value = fn()
        dt = time.perf_counter_ns() - t0
        best = dt if best is None else min(best, dt)
    return value, best


def _u_doubling_check(n: int, x, modulus):
    """U_n(x) recomputed from half-index values via a doubling identity."""
    def ev(kind, k):
        v = chebyshev.cheb_eval_big(kind, k, x, modulus)
        # exact products of this size belong in GMP
        return v if modulus else gmpy2.mpq(v)

    if n == 0:
        return 1
    m = (n + 1) // 2
    if n % 2:
        v = 2 * ev("T", m) * ev("U", m - 1)  # U_{2m-1} = 2 T_m U_{m-1}
    else:
        m = n // 2
        v = ev("U", m) ** 2 - ev("U", m - 1) ** 2  # U_{2m} = U_m^2 - U_{m-1}^2
    return v % modulus if modulus else v


def cmd_bench(args) -> int:
    x, n, d, mod = args.x, args.n, args.d, args.modulus
    rows = []
    if args.task == "eval_matrix_power":
        value = chebyshev.cheb_eval_big("U", n, x, mod)
        if (value if mod else gmpy2.mpq(value)) != _u_doubling_check(n, x, mod):
            raise AssertionError("matrix-power value fails the doubling identity")
        _, ns = _timed(lambda: chebyshev.cheb_eval_big("U", n, x, mod), args.repeat)
        rows.append(("eval_matrix_power", "matrix_power", n, "", x, ns))
    elif args.task == "eval_recurrence":
        if mod is not None:
            raise UsageError("eval_recurrence works over the rationals only")
        value = chebyshev.cheb_eval_recurrence("U", n, x)
        if value != chebyshev.cheb_eval_big("U", n, x):
            raise AssertionError("recurrence and matrix-power values differ")
        _, ns = _timed(lambda: chebyshev.cheb_eval_recurrence("U", n, x), args.repeat)
        rows.append(("eval_recurrence", "recurrence", n, "", x, ns))
    else:
        if abs(x) <= 1:
            raise DomainError(f"need |x| > 1, got x = {x}")
        a = surd.s_eval_series(n, d, x)
        b = surd.s_eval(n, d, x)
        if a != b:
            raise AssertionError("series and closed-form values differ")
        _, ns_a = _timed(lambda: surd.s_eval_series(n, d, x), args.repeat)
        _, ns_b = _timed(lambda: surd.s_eval(n, d, x), args.repeat)
        rows.append(("s_series_vs_closed", "series", n, d, x, ns_a))
        rows.append(("s_series_vs_closed", "closed", n, d, x, ns_b))
    print("task,route,n,d,x,nanoseconds")
    for r in rows:
        print(",".join(str(v) for v in r))
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chebsurd", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cheb", help="coefficients of T_n or U_n, lowest degree first")
    c.add_argument("--kind", required=True, choices=["T", "U"])
    c.add_argument("--n", required=True, type=_int)
    c.add_argument("--format", choices=FORMATS, default="plain")
    c.set_defaults(func=cmd_cheb)

    s = sub.add_parser("surd", help="exact S_{n,d}(x) with its gap certificate")
    s.add_argument("--x", required=True, type=_rat)
    s.add_argument("--n", type=_int, default=0)
    s.add_argument("--d", type=_int, default=1)
    s.add_argument("--method", choices=["series", "closed", "cf"], default="closed")
    s.add_argument("--format", choices=("plain", "json_lines", "csv"), default="plain")
    s.set_defaults(func=cmd_surd)

    v = sub.add_parser("verify", help="run an exhaustive verification suite")
    v.add_argument("--suite", required=True, choices=sorted(SUITES))
    v.add_argument("--max-n", type=_int)
    v.add_argument("--max-ij", type=_int)
    v.add_argument("--max-d", type=_int)
    v.add_argument("--max-x", type=_int)
    v.add_argument("--rows", type=_int)
    v.add_argument("--size", type=_int)
    v.add_argument("--count", type=_int, default=5)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("plain", "json_lines"), default="plain")
    v.set_defaults(func=cmd_verify)

    q = sub.add_parser("seq", help="integer sequences read off the Pascal-like triangle")
    q.add_argument("--name", required=True, choices=sorted(triangle.SEQUENCES))
    q.add_argument("--count", type=_int, required=True)
    q.add_argument("--format", choices=FORMATS, default="plain")
    q.add_argument("--compare", help="local b-file to diff against")
    q.add_argument("--shift", type=int, default=0, help="b-file index of our term 0")
    q.set_defaults(func=cmd_seq)

    b = sub.add_parser("bench", help="time competing evaluation routes (CSV)")
    b.add_argument("--task", required=True,
                   choices=["eval_recurrence", "eval_matrix_power", "s_series_vs_closed"])
    b.add_argument("--n", type=_int, required=True)
    b.add_argument("--d", type=_int, default=1)
    b.add_argument("--x", type=_rat, required=True)
    b.add_argument("--modulus", type=_int, help="evaluate modulo this integer instead of exactly")
    b.add_argument("--repeat", type=int, default=1)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        parser.exit(2, f"chebsurd: error: {e}\n")
    except (ChebsurdError, ValueError) as e:
        print(f"chebsurd: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
