"""Divisors, Moebius function and exact binomial coefficients."""
from __future__ import annotations

import math
from functools import lru_cache
from typing import TYPE_CHECKING

from .errors import DomainError

if TYPE_CHECKING:
    from .groups import GroupSpec


def _require_positive(m: int) -> None:
    if m <= 0:
        raise DomainError(f"expected a positive integer, got {m}")


@lru_cache(maxsize=4096)
def _factorize(m: int) -> tuple[tuple[int, int], ...]:
    factors = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            factors.append((p, a))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return tuple(factors)


def factorize(m: int) -> list[tuple[int, int]]:
    """Prime factorisation of ``m`` by trial division, primes increasing."""
    _require_positive(m)
    return list(_factorize(m))


def is_prime(m: int) -> bool:
    return m >= 2 and _factorize(m) == ((m, 1),)


def divisors(m: int) -> list[int]:
    """All divisors of ``m`` in increasing order."""
    _require_positive(m)
    divs = [1]
    for p, a in _factorize(m):
        divs = [d * p**k for d in divs for k in range(a + 1)]
    return sorted(divs)


def mobius(m: int) -> int:
    _require_positive(m)
    factors = _factorize(m)
    if any(a > 1 for _, a in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def binomial(a: int, b: int) -> int:
    """Exact binomial coefficient; zero outside ``0 <= b <= a``.

    Running product ``prod (a-k+1)/k`` over the shorter side; each partial
    product is itself a binomial coefficient, so every division is exact.
    """
    if a < 0 or b < 0 or b > a:
        return 0
    b = min(b, a - b)
    result = 1
    for k in range(1, b + 1):
        result = result * (a - b + k) // k
    return result


def mobius_sum(s: int, e: int, G: "GroupSpec") -> int:
    """``sum_{d | gcd(s, e)} mu(s/d) * #G[d]``. Signed; not a count."""
    _require_positive(s)
    _require_positive(e)
    return sum(mobius(s // d) * G.torsion_size(d) for d in divisors(math.gcd(s, e)))
