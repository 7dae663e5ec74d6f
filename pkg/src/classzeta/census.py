"""Class numbers of imaginary quadratic fields.

Three routes:

* ``class_number_forms``: count primitive reduced forms of one discriminant.
* ``class_number_dirichlet``: the analytic class number formula, used as an
  independent oracle.
* ``census``: one sweep over all reduced triples (a, b, c) with
  4ac - b^2 <= X, histogrammed by |D|, then restricted to fundamental D.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

from .numtheory import Discriminant, fundamental_mask, is_fundamental, kronecker
from .watkins import WatkinsRow, witnesses

log = logging.getLogger(__name__)

MAX_BOUND = 10**7
# 4ac - b^2 and slice endpoints stay far below 2^63 for any X <= 2^40
HARD_LIMIT = 2**40


class CensusRangeError(ValueError):
    pass


@dataclass(frozen=True)
class ReducedForm:
    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if a <= 0 or c <= 0:
            raise ValueError(f"{self}: a and c must be positive")
        if b * b - 4 * a * c >= 0:
            raise ValueError(f"{self}: not positive definite")
        if not abs(b) <= a <= c:
            raise ValueError(f"{self}: need |b| <= a <= c")
        if (abs(b) == a or a == c) and b < 0:
            raise ValueError(f"{self}: boundary form needs b >= 0")
        if gcd(gcd(a, b), c) != 1:
            raise ValueError(f"{self}: not primitive")

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c


def _as_disc(D) -> int:
    if isinstance(D, Discriminant):
        return D.value
    if not is_fundamental(D):
        raise ValueError(f"{D} is not a fundamental discriminant")
    return D


def reduced_forms(D) -> list[ReducedForm]:
    D = _as_disc(D)
    n = -D
    out = []
    for b in range(n % 2, isqrt(n // 3) + 1, 2):
        ac = (b * b + n) // 4
        for a in range(max(b, 1), isqrt(ac) + 1):
            if ac % a:
                continue
            c = ac // a
            if gcd(gcd(a, b), c) != 1:
                continue
            out.append(ReducedForm(a, b, c))
            if 0 < b < a < c:
                out.append(ReducedForm(a, -b, c))
    return out


def class_number_forms(D) -> int:
    return len(reduced_forms(D))


def class_number_dirichlet(D) -> int:
    """h(D) = w / (2|D|) * |sum_{k<|D|} (D/k) k|."""
    D = _as_disc(D)
    n = -D
    w = 6 if D == -3 else 4 if D == -4 else 2
    s = sum(kronecker(D, k) * k for k in range(1, n))
    num = w * abs(s)
    h, r = divmod(num, 2 * n)
    if r:
        raise ArithmeticError(f"class number formula for D={D} gave non-integer {num}/{2 * n}")
    return h


def _sweep(X: int, a_lo: int, a_hi: int) -> np.ndarray:
    """Histogram over |D| of reduced triples with a in [a_lo, a_hi)."""
    hist = np.zeros(X + 1, dtype=np.uint32)
    for a in range(a_lo, a_hi):
        step = 4 * a
        for b in range(-a + 1, a + 1):
            c_lo = a if b >= 0 else a + 1
            c_hi = (X + b * b) // step
            if c_hi < c_lo:
                continue
            g = gcd(a, b)
            start = step * c_lo - b * b
            stop = step * c_hi - b * b
            if g == 1:
                hist[start : stop + 1 : step] += 1
            else:
                cs = np.arange(c_lo, c_hi + 1)
                cs = cs[np.gcd(cs, g) == 1]
                hist[step * cs - b * b] += 1
    return hist


def _chunks(a_max: int, parts: int) -> list[tuple[int, int]]:
    # roughly equal numbers of triples: work for a given a scales like X/a * a = X,
    # so contiguous equal-width ranges of a are balanced enough
    edges = np.linspace(1, a_max + 1, parts + 1).round().astype(int)
    return [(int(lo), int(hi)) for lo, hi in zip(edges[:-1], edges[1:]) if hi > lo]


def form_histogram(X: int, workers: int = 1) -> np.ndarray:
    """Number of reduced forms (primitive where it matters) for each |D| <= X."""
    a_max = isqrt(X // 3)
    chunks = _chunks(a_max, max(1, workers) * 4 if workers > 1 else 1)
    if workers <= 1 or len(chunks) <= 1:
        parts = [_sweep(X, lo, hi) for lo, hi in chunks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sweep, [X] * len(chunks), *zip(*chunks)))
    total = np.zeros(X + 1, dtype=np.uint32)
    for p in parts:  # index order, so the merge is deterministic
        total += p
    return total


@dataclass
class CensusRow:
    h: int
    count: int
    max_abs_disc: int


@dataclass
class CensusTable:
    bound: int
    rows: dict[int, CensusRow]
    complete_through: frozenset[int] = field(default_factory=frozenset)
    class_numbers: np.ndarray | None = field(default=None, repr=False, compare=False)

    def is_complete(self, h: int) -> bool:
        return h in self.complete_through

    def total(self) -> int:
        return sum(r.count for r in self.rows.values())

    def count(self, h: int) -> int:
        r = self.rows.get(h)
        return r.count if r else 0

    def h_of(self, D: int) -> int:
        """Class number of fundamental D with |D| <= bound, read from the sweep."""
        if self.class_numbers is None:
            raise RuntimeError("table was built without per-discriminant data")
        if not is_fundamental(D) or -D > self.bound:
            raise ValueError(f"{D} is not a fundamental discriminant within the bound {self.bound}")
        return int(self.class_numbers[-D])

    def sorted_rows(self) -> list[CensusRow]:
        return [self.rows[h] for h in sorted(self.rows)]


def default_workers() -> int:
    env = os.environ.get("CLASSZETA_WORKERS")
    if env:
        try:
            w = int(env)
        except ValueError:
            raise ValueError(f"CLASSZETA_WORKERS must be a positive integer, got {env!r}") from None
        if w >= 1:
            return w
        raise ValueError(f"CLASSZETA_WORKERS must be a positive integer, got {env!r}")
    return 1


def census(X: int, workers: int = 1, max_bound: int = MAX_BOUND) -> CensusTable:
    if X < 3:
        raise CensusRangeError(f"census bound must be >= 3, got {X}")
    if X > min(max_bound, HARD_LIMIT):
        raise CensusRangeError(
            f"census bound {X} exceeds the supported range ({min(max_bound, HARD_LIMIT)}); "
            "raise max_bound explicitly if the memory cost of a length-X histogram is acceptable"
        )
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    log.info("census X=%d workers=%d", X, workers)
    hist = form_histogram(X, workers)
    fm = fundamental_mask(X)
    hist = np.where(fm, hist, 0).astype(np.uint32)

    ds = np.nonzero(fm)[0]
    hs = hist[ds]
    if (hs == 0).any():
        raise ArithmeticError(f"fundamental discriminant -{ds[hs == 0][0]} got no reduced form")
    rows: dict[int, CensusRow] = {}
    counts = np.bincount(hs)
    maxd = np.zeros(len(counts), dtype=np.int64)
    np.maximum.at(maxd, hs, ds)
    for h in np.nonzero(counts)[0]:
        rows[int(h)] = CensusRow(int(h), int(counts[h]), int(maxd[h]))
    complete = frozenset(h for h, w in witnesses().items() if w <= X)
    return CensusTable(X, rows, complete, hist)


VERDICT_MATCH = "match"
VERDICT_MISMATCH = "mismatch"
VERDICT_INCONCLUSIVE = "inconclusive"


def verify_watkins(t: CensusTable, reference: list[WatkinsRow]) -> list[tuple[int, int, int, str]]:
    """(h, expected, actual, verdict) for every reference row."""
    out = []
    for r in sorted(reference):
        actual = t.count(r.h)
        if r.largest > t.bound or not t.is_complete(r.h):
            verdict = VERDICT_INCONCLUSIVE
        else:
            verdict = VERDICT_MATCH if actual == r.count else VERDICT_MISMATCH
        out.append((r.h, r.count, actual, verdict))
    return out
