"""Integer / rational polynomial helpers (coefficient lists, increasing degree)."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence


def trim(p: Sequence) -> list:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def poly_mul(p: Sequence, q: Sequence) -> list:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def poly_prod(*ps: Sequence) -> list:
    out: list = [1]
    for p in ps:
        out = poly_mul(out, p)
    return out


def one_minus_s_pow(n: int) -> list[int]:
    """Coefficients of (1 - s)^n."""
    return [(-1) ** k * comb(n, k) for k in range(n + 1)]


def degree(p: Sequence) -> int:
    p = trim(p)
    return -1 if p == [0] else len(p) - 1


def poly_divmod(p: Sequence, q: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    p = [Fraction(c) for c in trim(p)]
    q = [Fraction(c) for c in trim(q)]
    if q == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    dq = len(q) - 1
    if len(p) - 1 < dq:
        return [Fraction(0)], p
    quo = [Fraction(0)] * (len(p) - dq)
    rem = p[:]
    for i in range(len(p) - 1 - dq, -1, -1):
        c = rem[i + dq] / q[-1]
        quo[i] = c
        if c:
            for j, b in enumerate(q):
                rem[i + j] -= c * b
    return trim(quo), trim(rem[:dq] or [Fraction(0)])


def poly_gcd(p: Sequence, q: Sequence) -> list[Fraction]:
    """Greatest common divisor normalized to constant term 1 when possible,
    otherwise monic."""
    a = [Fraction(c) for c in trim(p)]
    b = [Fraction(c) for c in trim(q)]
    while b != [0]:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a == [0]:
        return a
    lead = a[0] if a[0] else a[-1]
    return [c / lead for c in a]


def as_int_poly(p: Sequence[Fraction]) -> list[int]:
    p = trim(p)
    if any(Fraction(c).denominator != 1 for c in p):
        raise ValueError(f"polynomial {p} is not integral")
    return [int(c) for c in p]
