"""Closed-form counts over a whole finite abelian group.

``m_full(G, i, g)``
    multisets of size ``i`` drawn from ``G`` with sum ``g``;
``n_full(G, i, g)``
    subsets of size ``i`` of ``G`` with sum ``g``;
``p_parts(G, i, g)``
    multisets of ``i`` nonzero elements with sum ``g`` (partitions of ``g``).

All three are ``(1/n) * sum over s | gcd(exp(G), i)`` of a binomial weight
times ``mobius_sum(s, e(g), G)``. The numerators are exposed separately so
their divisibility by ``n`` can be inspected.
"""
from __future__ import annotations

import math

from .errors import DomainError, InvariantViolation
from .groups import GroupElement, GroupSpec
from .numtheory import binomial, divisors, factorize, is_prime, mobius_sum


def _check_query(G: GroupSpec, i: int, g: GroupElement) -> None:
    G._check(g)
    if i < 0:
        raise DomainError(f"size must be non-negative, got {i}")


def _exact_div(numerator: int, n: int) -> int:
    q, r = divmod(numerator, n)
    if r:
        raise InvariantViolation(f"numerator {numerator} is not divisible by group order {n}")
    return q


def _s_range(G: GroupSpec, i: int, descending: bool) -> list[int]:
    # gcd(exp, 0) = exp, which admits every divisor of the exponent.
    divs = divisors(math.gcd(G.exponent, i))
    return divs[::-1] if descending else divs


def _check_s_divides_n(s: int, n: int) -> None:
    if n % s:
        raise InvariantViolation(f"summation index {s} does not divide group order {n}")


def multiset_numerator(G: GroupSpec, i: int, e: int, *, descending: bool = False) -> int:
    """``n * M(G, i, g)`` for any ``g`` with ``e(g) = e``, as the raw divisor sum."""
    n = G.order
    total = 0
    for s in _s_range(G, i, descending):
        _check_s_divides_n(s, n)
        total += binomial(n // s + i // s - 1, i // s) * mobius_sum(s, e, G)
    return total


def subset_numerator(G: GroupSpec, i: int, e: int, *, descending: bool = False) -> int:
    """``n * N(G, i, g)`` for any ``g`` with ``e(g) = e``."""
    n = G.order
    total = 0
    for s in _s_range(G, i, descending):
        _check_s_divides_n(s, n)
        sign = -1 if (i + i // s) % 2 else 1
        total += sign * binomial(n // s, i // s) * mobius_sum(s, e, G)
    return total


def m_full(G: GroupSpec, i: int, g: GroupElement, *, descending: bool = False) -> int:
    """Number of size-``i`` multisets over ``G`` summing to ``g``.

    ``descending`` only reverses the order the divisor sum is accumulated in.
    """
    _check_query(G, i, g)
    if i == 0:
        return int(g.is_zero)
    return _exact_div(multiset_numerator(G, i, G.e_of(g), descending=descending), G.order)


def n_full(G: GroupSpec, i: int, g: GroupElement) -> int:
    """Number of size-``i`` subsets of ``G`` summing to ``g``."""
    _check_query(G, i, g)
    if i == 0:
        return int(g.is_zero)
    return _exact_div(subset_numerator(G, i, G.e_of(g)), G.order)


def p_parts(G: GroupSpec, i: int, g: GroupElement) -> int:
    """Number of multisets of ``i`` nonzero elements summing to ``g``.

    Difference of the multiset sums at sizes ``i`` and ``i - 1``: removing
    the zero element multiplies the generating series by ``1 - X``.
    """
    _check_query(G, i, g)
    if i == 0:
        return int(g.is_zero)
    e = G.e_of(g)
    numerator = multiset_numerator(G, i, e) - multiset_numerator(G, i - 1, e)
    count = _exact_div(numerator, G.order)
    if count < 0:
        raise InvariantViolation(f"negative partition count {count}")
    return count


def m_coprime_fastpath(G: GroupSpec, i: int, g: GroupElement) -> int:
    """``binomial(n+i-1, i) / n``, valid when ``gcd(i, exp(G)) = 1``."""
    _check_query(G, i, g)
    if i < 1 or math.gcd(i, G.exponent) != 1:
        raise DomainError(f"needs i >= 1 coprime to exponent {G.exponent}, got i={i}")
    n = G.order
    return _exact_div(binomial(n + i - 1, i), n)


def _split_power(x: int, p: int) -> tuple[int, int]:
    """Write ``x = t * p**w`` with ``p`` not dividing ``t``; returns ``(t, w)``."""
    w = 0
    while x % p == 0:
        x //= p
        w += 1
    return x, w


def prime_power_weight(p: int, h: int, u: int) -> int:
    """``sum_{c=0}^{min(h,u)} mu(p^(h-c)) * p^c`` in closed piecewise form."""
    if h == 0:
        return 1
    if h <= u:
        return p**h - p ** (h - 1)
    if h == u + 1:
        return -(p**u)
    return 0


def m_prime_power(p: int, m: int, i: int, g: GroupElement | int) -> int:
    """``M(Z_{p^m}, i, g)`` via the specialised cyclic prime-power formula.

    With ``i = t p^w`` and ``g = k p^u`` (``u = m`` for ``g = 0``) only the
    terms ``h <= min(w, u) + 1`` of the divisor sum survive.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if m < 1:
        raise DomainError(f"prime power exponent must be >= 1, got {m}")
    if i < 1:
        raise DomainError(f"size must be >= 1, got {i}")
    n = p**m
    if isinstance(g, GroupElement):
        if g.group != GroupSpec.cyclic(n):
            raise DomainError(f"{g!r} is not an element of Z{n}")
        g = g.residues[0]
    g %= n
    t, w = _split_power(i, p)
    u = m if g == 0 else _split_power(g, p)[1]

    def term(h: int) -> int:
        return binomial(p ** (m - h) + t * p ** (w - h) - 1, t * p ** (w - h))

    total = term(0)
    for h in range(1, min(w, u) + 1):
        total += term(h) * (p**h - p ** (h - 1))
    if u < min(w, m):
        total -= term(u + 1) * p**u
    return _exact_div(total, n)


def group_is_cyclic_prime_power(G: GroupSpec) -> tuple[int, int] | None:
    """``(p, m)`` when ``G`` is presented as a single factor ``Z_{p^m}``."""
    if G.rank != 1 or G.order < 2:
        return None
    factors = factorize(G.order)
    if len(factors) != 1:
        return None
    return factors[0]
