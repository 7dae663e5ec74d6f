"""Exact truncated power series and the dynamical zeta constructions.

A zeta function of a map with fixed-point counts ``N_m`` is
``exp(sum N_m s^m / m)``. With least-period counts ``K_m`` (related by
``N_m = sum_{d|m} K_d``) the same series is an Euler product
``prod (1 - s^m)^(-K_m/m)`` and its logarithmic derivative is the Lambert
series ``s * zeta'/zeta = sum K_m s^m / (1 - s^m)``.

All arithmetic is over ``fractions.Fraction``; no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .numtheory import moebius
from .poly import poly_mul, trim

DEFAULT_ORDER = 50


class SeriesError(ValueError):
    pass


class NonIntegralCountError(SeriesError):
    """Raised when a zeta series does not come from an integer count sequence."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series c_0 + c_1 s + ... + c_T s^T with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise SeriesError(f"order must be non-negative, got {order}")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise SeriesError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1], order)

    @classmethod
    def from_polynomial(cls, poly: Sequence, order: int) -> TruncatedSeries:
        return cls(poly, order)

    def __getitem__(self, m: int) -> Fraction:
        return self.coeffs[m]

    def __len__(self) -> int:
        return len(self.coeffs)

    def _check(self, other: TruncatedSeries) -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise SeriesError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-a for a in self.coeffs)

    def scale(self, k) -> TruncatedSeries:
        k = _frac(k)
        return TruncatedSeries(k * a for a in self.coeffs)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def as_ints(self) -> list[int]:
        if not self.is_integral():
            raise SeriesError("series has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for m, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if m == 0 else f"{c}*s^{m}")
        return " + ".join(terms) or "0"


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    f._check(g)
    T = f.order
    a, b = f.coeffs, g.coeffs
    nz = [(i, x) for i, x in enumerate(a) if x]
    out = [Fraction(0)] * (T + 1)
    for i, x in nz:
        for j in range(T + 1 - i):
            y = b[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(out)


def series_derivative(f: TruncatedSeries) -> list[Fraction]:
    """Coefficients of f' up to s^(T-1)."""
    return [m * f.coeffs[m] for m in range(1, f.order + 1)]


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    if f.coeffs[0] != 0:
        raise SeriesError(f"exp needs a zero constant term, got {f.coeffs[0]}")
    T = f.order
    df = series_derivative(f)
    g = [Fraction(0)] * (T + 1)
    g[0] = Fraction(1)
    # g' = f' g  =>  n g_n = sum_{k=1}^{n} k f_k g_{n-k}
    for n in range(1, T + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if df[k - 1]:
                acc += df[k - 1] * g[n - k]
        g[n] = acc / n
    return TruncatedSeries(g)


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    if f.coeffs[0] != 1:
        raise SeriesError(f"log needs constant term 1, got {f.coeffs[0]}")
    T = f.order
    a = f.coeffs
    # g' f = f'  =>  n g_n = n a_n - sum_{k=1}^{n-1} k g_k a_{n-k}
    g = [Fraction(0)] * (T + 1)
    for n in range(1, T + 1):
        acc = n * a[n]
        for k in range(1, n):
            if g[k] and a[n - k]:
                acc -= k * g[k] * a[n - k]
        g[n] = acc / n
    return TruncatedSeries(g)


def series_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse, requires f(0) != 0."""
    one = TruncatedSeries.one(f.order)
    return expand_rational(RationalFunctionRep(one.coeffs, f.coeffs), f.order)


@dataclass(frozen=True)
class RationalFunctionRep:
    """numerator(s) / denominator(s) with the denominator invertible at s = 0.

    Polynomials are coefficient tuples in increasing degree.
    """

    numerator: tuple
    denominator: tuple

    def __post_init__(self):
        num = tuple(trim(self.numerator))
        den = tuple(trim(self.denominator))
        if den[0] == 0:
            raise SeriesError("denominator must have a nonzero constant term")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    def same_function(self, other: RationalFunctionRep) -> bool:
        """Equality as rational functions (cross multiplication)."""
        return trim(poly_mul(self.numerator, other.denominator)) == trim(
            poly_mul(other.numerator, self.denominator)
        )


def expand_rational(r: RationalFunctionRep, T: int) -> TruncatedSeries:
    num = [_frac(c) for c in r.numerator]
    den = [_frac(c) for c in r.denominator]
    if den[0] == 0:
        raise SeriesError("denominator must have a nonzero constant term")
    inv0 = 1 / den[0]
    out = [Fraction(0)] * (T + 1)
    for n in range(T + 1):
        acc = num[n] if n < len(num) else Fraction(0)
        for k in range(1, min(n, len(den) - 1) + 1):
            if den[k]:
                acc -= den[k] * out[n - k]
        out[n] = acc * inv0
    return TruncatedSeries(out)


def _need(seq: Sequence, T: int, name: str) -> list:
    if len(seq) < T:
        raise SeriesError(f"{name} has {len(seq)} terms, need at least {T}")
    return list(seq[:T])


def artin_mazur_from_N(N: Sequence, T: int) -> TruncatedSeries:
    """exp(sum_{m=1}^T N_m s^m / m), ``N[0]`` being N_1."""
    N = _need(N, T, "N")
    return series_exp(TruncatedSeries([0] + [Fraction(n, m) for m, n in enumerate(N, 1)]))


def lambert_series(K: Sequence, T: int) -> TruncatedSeries:
    """sum_{m=1}^T K_m s^m / (1 - s^m), each quotient expanded to order T."""
    K = _need(K, T, "K")
    out = [Fraction(0)] * (T + 1)
    for m, k in enumerate(K, 1):
        if k:
            k = _frac(k)
            for j in range(m, T + 1, m):
                out[j] += k
    return TruncatedSeries(out)


def lambert_from_K(K: Sequence, T: int) -> TruncatedSeries:
    """Zeta series whose logarithmic derivative is the Lambert series of K.

    s * (log zeta)' = sum K_m s^m / (1 - s^m), so the s^n coefficient of
    log zeta is the s^n coefficient of the Lambert series divided by n.
    """
    L = lambert_series(K, T)
    return series_exp(TruncatedSeries([0] + [L[n] / n for n in range(1, T + 1)]))


def lambert_literal(K: Sequence, T: int) -> TruncatedSeries:
    """exp(sum K_m/m * s^m/(1 - s^m)) taken at face value.

    This is *not* the zeta series of K: it omits the 1/k weight on the
    s^(mk) terms. Kept so reports can show how far it lands from the
    Euler product.
    """
    K = _need(K, T, "K")
    out = [Fraction(0)] * (T + 1)
    for m, k in enumerate(K, 1):
        if k:
            w = Fraction(k, m)
            for j in range(m, T + 1, m):
                out[j] += w
    return series_exp(TruncatedSeries(out))


def _binomial_power(alpha: Fraction, m: int, T: int) -> list[tuple[int, Fraction]]:
    """Nonzero terms of (1 - s^m)^(-alpha) up to s^T as (exponent, coeff)."""
    terms = [(0, Fraction(1))]
    c = Fraction(1)
    for j in range(1, T // m + 1):
        c = c * (alpha + j - 1) / j
        if c == 0:
            break
        terms.append((j * m, c))
    return terms


def euler_from_K(K: Sequence, T: int) -> TruncatedSeries:
    """prod_{m=1}^T (1 - s^m)^(-K_m/m) truncated at s^T.

    Exponents need not be integers; the generalized binomial series is used.
    """
    K = _need(K, T, "K")
    acc = [Fraction(0)] * (T + 1)
    acc[0] = Fraction(1)
    for m, k in enumerate(K, 1):
        if not k:
            continue
        factor = _binomial_power(Fraction(k, m), m, T)
        new = [Fraction(0)] * (T + 1)
        for i, a in enumerate(acc):
            if not a:
                continue
            for e, c in factor:
                if i + e > T:
                    break
                new[i + e] += a * c
        acc = new
    return TruncatedSeries(acc)


def extract_N(zeta: TruncatedSeries) -> list[int]:
    """Fixed-point counts N_1..N_T from an Artin-Mazur series."""
    if zeta.coeffs[0] != 1:
        raise SeriesError(f"zeta series must start with 1, got {zeta.coeffs[0]}")
    lg = series_log(zeta)
    out = []
    for m in range(1, zeta.order + 1):
        v = m * lg[m]
        if v.denominator != 1:
            raise NonIntegralCountError(f"N_{m} = {v} is not an integer")
        out.append(v.numerator)
    return out


def K_from_N(N: Sequence[int]) -> list[int]:
    """Least-period counts by Moebius inversion: K_m = sum_{l|m} mu(l) N_{m/l}."""
    M = len(N)
    K = []
    for m in range(1, M + 1):
        total = 0
        for l in range(1, m + 1):
            if m % l == 0:
                mu = moebius(l)
                if mu:
                    total += mu * N[m // l - 1]
        K.append(total)
    return K


def N_from_K(K: Sequence[int]) -> list[int]:
    M = len(K)
    N = [0] * M
    for d in range(1, M + 1):
        k = K[d - 1]
        if k:
            for m in range(d, M + 1, d):
                N[m - 1] += k
    return N


def dold_residues(K: Sequence[int]) -> list[tuple[int, int]]:
    """(m, K_m mod m) for each m; residue 0 means m divides K_m."""
    return [(m, k % m) for m, k in enumerate(K, 1)]


@dataclass(frozen=True)
class PeriodCounts:
    N: tuple[int, ...]
    K: tuple[int, ...]

    def __post_init__(self):
        if len(self.N) != len(self.K):
            raise SeriesError("N and K must have the same length")
        if list(self.N) != N_from_K(self.K):
            raise SeriesError("N is not the divisor sum of K")

    @property
    def length(self) -> int:
        return len(self.N)

    @classmethod
    def from_N(cls, N: Sequence[int]) -> PeriodCounts:
        return cls(tuple(N), tuple(K_from_N(N)))

    @classmethod
    def from_K(cls, K: Sequence[int]) -> PeriodCounts:
        return cls(tuple(N_from_K(K)), tuple(K))


def series_to_rows(f: TruncatedSeries) -> list[tuple[int, int, int]]:
    return [(m, c.numerator, c.denominator) for m, c in enumerate(f.coeffs)]


def series_from_rows(rows: Iterable[tuple[int, int, int]]) -> TruncatedSeries:
    rows = sorted((int(m), int(p), int(q)) for m, p, q in rows)
    if [m for m, _, _ in rows] != list(range(len(rows))):
        raise SeriesError("series rows must cover m = 0..T exactly once")
    return TruncatedSeries(Fraction(p, q) for _, p, q in rows)
