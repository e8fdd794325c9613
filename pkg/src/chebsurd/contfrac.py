"""Finite continued fractions and the integer expansion of x - sqrt(x^2 - 1)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .errors import DomainError, MalformedCF
from .kernel import Number


@dataclass(frozen=True)
class CFrac:
    """Partial quotients [a0; a1, a2, ...] with a_k >= 1 for k >= 1."""

    quotients: tuple[int, ...]

    def __post_init__(self):
        q = tuple(int(a) for a in self.quotients)
        object.__setattr__(self, "quotients", q)
        if not q:
            raise MalformedCF("empty continued fraction")
        for k, a in enumerate(q[1:], start=1):
            if a <= 0:
                raise MalformedCF(f"partial quotient a_{k} = {a} must be positive")

    def __len__(self):
        return len(self.quotients)

    def __iter__(self):
        return iter(self.quotients)

    def __str__(self):
        head, tail = self.quotients[0], self.quotients[1:]
        if not tail:
            return f"[{head}]"
        return f"[{head};{','.join(map(str, tail))}]"

    _PATTERN = re.compile(r"^\[\s*(-?\d+)\s*(?:;\s*(\d+(?:\s*,\s*\d+)*)\s*)?\]$")

    @classmethod
    def parse(cls, text: str) -> "CFrac":
        m = cls._PATTERN.match(text.strip())
        if not m:
            raise MalformedCF(f"not a continued fraction: {text!r}")
        head = int(m.group(1))
        tail = [int(t) for t in m.group(2).split(",")] if m.group(2) else []
        return cls((head, *tail))


def _as_cf(cf) -> CFrac:
    return cf if isinstance(cf, CFrac) else CFrac(tuple(cf))


def _convergent_pairs(cf: CFrac):
    p_prev, p = 1, cf.quotients[0]
    q_prev, q = 0, 1
    yield p, q
    for a in cf.quotients[1:]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        yield p, q


def cf_eval(cf) -> Number:
    """Value of a finite continued fraction by the convergent recurrence."""
    cf = _as_cf(cf)
    *_, (p, q) = _convergent_pairs(cf)
    v = Fraction(p, q)
    return v.numerator if v.denominator == 1 else v


def convergents(cf) -> list[Number]:
    cf = _as_cf(cf)
    out = []
    for p, q in _convergent_pairs(cf):
        v = Fraction(p, q)
        out.append(v.numerator if v.denominator == 1 else v)
    return out


def cf_theorem5(n: int, x: int) -> CFrac:
    """[0; 2x-1, 1, (2(x-1), 1) repeated n times]; its value is U_n(x)/U_{n+1}(x)."""
    if isinstance(x, Fraction) and x.denominator != 1:
        raise DomainError("x must be an integer")
    x = int(x)
    if x <= 1:
        raise DomainError(f"need integer x >= 2, got {x}")
    if n < 0:
        raise DomainError(f"need n >= 0, got {n}")
    return CFrac((0, 2 * x - 1, 1) + (2 * (x - 1), 1) * n)


@dataclass(frozen=True)
class SurdState:
    """The number (P + sqrt(D)) / Q with Q dividing D - P^2."""

    D: int
    P: int
    Q: int

    def quotient(self, root: int) -> int:
        # floor((P + sqrt D)/Q) from the integer root, for either sign of Q
        if self.Q > 0:
            return (self.P + root) // self.Q
        return (self.P + root + 1) // self.Q

    def step(self, a: int) -> "SurdState":
        P = a * self.Q - self.P
        return SurdState(self.D, P, (self.D - P * P) // self.Q)


@dataclass(frozen=True)
class SurdExpansion:
    cf: CFrac
    states: tuple[SurdState, ...]
    period_start: int | None
    period_length: int | None

    @property
    def period(self) -> tuple[int, ...] | None:
        if self.period_start is None:
            return None
        s = self.period_start
        return self.cf.quotients[s:s + self.period_length]


def surd_expansion(x: int, count: int) -> SurdExpansion:
    """First ``count`` partial quotients of x - sqrt(x^2-1), integer arithmetic only.

    The leading 0 is emitted directly; the reciprocal x + sqrt(x^2-1) is then
    expanded from the state (P, Q) = (x, 1). The period is located by the first
    revisit of a (P, Q) state among the states visited.
    """
    if isinstance(x, Fraction) and x.denominator != 1:
        raise DomainError("x must be an integer")
    x = int(x)
    if x <= 1:
        raise DomainError(f"need integer x >= 2, got {x}")
    if count < 1:
        raise DomainError("count must be >= 1")
    D = x * x - 1
    root = isqrt(D)
    quotients = [0]
    states: list[SurdState] = []
    seen: dict[tuple[int, int], int] = {}
    period_start = period_length = None
    state = SurdState(D, x, 1)
    while len(quotients) < count:
        pos = len(quotients)
        key = (state.P, state.Q)
        if period_start is None and key in seen:
            period_start, period_length = seen[key], pos - seen[key]
        seen.setdefault(key, pos)
        states.append(state)
        a = state.quotient(root)
        quotients.append(a)
        state = state.step(a)
    if period_start is None:
        # one more look-ahead so short expansions still report a period when visible
        key = (state.P, state.Q)
        if key in seen:
            period_start = seen[key]
            period_length = len(quotients) - period_start
    return SurdExpansion(CFrac(tuple(quotients)), tuple(states), period_start, period_length)


def surd_expand(x: int, count: int) -> CFrac:
    return surd_expansion(x, count).cf


def convergent_index(cf, value) -> int | None:
    """Position of ``value`` among the convergents of ``cf``, or None."""
    value = Fraction(value)
    for k, c in enumerate(convergents(cf)):
        if c == value:
            return k
    return None
