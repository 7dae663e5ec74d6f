"""Elementary integer number theory: Moebius, squarefree tests, fundamental
discriminants and the Kronecker symbol.

Everything here is a pure function. The batch helpers (``moebius_table``,
``fundamental_mask``) sieve once up to a bound and return read-only arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

import numpy as np

SIEVE_THRESHOLD = 10**5


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` by trial division."""
    if n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n}")
    out: dict[int, int] = {}
    while n % 2 == 0:
        out[2] = out.get(2, 0) + 1
        n //= 2
    p = 3
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def moebius(l: int) -> int:
    if not isinstance(l, (int, np.integer)) or isinstance(l, bool):
        raise TypeError(f"moebius needs an integer, got {l!r}")
    if l < 1:
        raise ValueError(f"moebius is defined for l >= 1, got {l}")
    f = factorize(int(l))
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def moebius_table(n: int) -> np.ndarray:
    """mu(0..n) as an int8 array (entry 0 is unused and set to 0)."""
    mu = np.ones(n + 1, dtype=np.int8)
    mu[0] = 0
    is_comp = np.zeros(n + 1, dtype=bool)
    for p in range(2, n + 1):
        if is_comp[p]:
            continue
        is_comp[2 * p :: p] = True
        mu[p::p] *= -1
        if p * p <= n:
            mu[p * p :: p * p] = 0
    return mu


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    if n % 4 == 0:
        return False
    while n % 2 == 0:
        n //= 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return False
        p += 2
    return True


def is_fundamental(d: int) -> bool:
    """True iff ``d`` is a negative fundamental discriminant."""
    if d >= 0:
        return False
    r = d % 4
    if r == 1:
        return is_squarefree(d)
    if r == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def squarefree_mask(n: int) -> np.ndarray:
    """Boolean array ``sf`` with ``sf[k]`` true iff k is squarefree, 0 <= k <= n."""
    sf = np.ones(n + 1, dtype=bool)
    sf[0] = False
    for p in range(2, isqrt(n) + 1):
        sf[p * p :: p * p] = False
    return sf


def fundamental_mask(n: int) -> np.ndarray:
    """Boolean array ``fm`` with ``fm[k]`` true iff ``-k`` is fundamental, 0 <= k <= n."""
    if n < SIEVE_THRESHOLD:
        return np.array([is_fundamental(-k) for k in range(n + 1)], dtype=bool)
    sf = squarefree_mask(n)
    k = np.arange(n + 1)
    # -k = 1 (mod 4)  <=>  k = 3 (mod 4)
    fm = (k % 4 == 3) & sf
    # -k = 4m with m = -k/4; m = 2, 3 (mod 4)  <=>  k/4 = 2, 1 (mod 4)
    q = k // 4
    fm |= (k % 4 == 0) & np.isin(q % 4, (1, 2)) & sf[q]
    fm[0] = False
    return fm


def kronecker(d: int, n: int) -> int:
    """Kronecker symbol (d/n) for n >= 1."""
    if n == 0:
        raise ValueError("kronecker symbol (d/0) is not supported here; n must be >= 1")
    if n < 0:
        raise ValueError(f"n must be positive, got {n}")
    if n == 1:
        return 1
    result = 1
    # strip powers of two from n
    if n % 2 == 0:
        if d % 2 == 0:
            return 0
        v = 0
        while n % 2 == 0:
            n //= 2
            v += 1
        if v % 2 and d % 8 in (3, 5):
            result = -result
    # Jacobi symbol (d/n) for odd n
    a = d % n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@lru_cache(maxsize=8)
def smallest_prime_factors(n: int) -> np.ndarray:
    spf = np.zeros(n + 1, dtype=np.int64)
    for p in range(2, n + 1):
        if spf[p] == 0:
            view = spf[p::p]
            view[view == 0] = p
    spf.flags.writeable = False
    return spf


@dataclass(frozen=True)
class Discriminant:
    """A negative fundamental discriminant."""

    value: int

    def __post_init__(self):
        if not is_fundamental(self.value):
            raise ValueError(f"{self.value} is not a fundamental discriminant")

    @property
    def magnitude(self) -> int:
        return -self.value

    def __int__(self) -> int:
        return self.value
