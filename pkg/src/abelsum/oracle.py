"""Ground-truth engines: direct enumeration and group-ring power series.

Neither engine uses any closed form. Enumeration walks combinations (with
or without repetition) of the allowed elements; the series engine multiplies
out ``prod 1/(1 - sigma X)`` or ``prod (1 + sigma X)`` in the integer group
ring, truncated at a maximum degree.
"""
from __future__ import annotations

import itertools
import os
from typing import Iterable

from .errors import BudgetExceeded, DomainError
from .groups import GroupElement, GroupSpec
from .numtheory import binomial

DEFAULT_BUDGET = 10**8
BUDGET_ENV = "ABELSUM_ENUM_BUDGET"

# (size, target) -> count
CountTable = dict[tuple[int, GroupElement], int]


def enumeration_budget() -> int:
    value = os.environ.get(BUDGET_ENV)
    return int(value) if value else DEFAULT_BUDGET


def _domain_indices(G: GroupSpec, exclude: Iterable[GroupElement]) -> list[int]:
    banned = {G.index(u) for u in exclude}
    return [x for x in range(G.order) if x not in banned]


def _enumerate(G, exclude, i, with_repetition, budget):
    if i < 0:
        raise DomainError(f"size must be non-negative, got {i}")
    domain = _domain_indices(G, exclude)
    size = binomial(len(domain) + i - 1, i) if with_repetition else binomial(len(domain), i)
    budget = enumeration_budget() if budget is None else budget
    if size > budget:
        raise BudgetExceeded(f"{size} combinations exceed the enumeration budget {budget}")
    add = G.addition_table
    counts = [0] * G.order
    combos = (
        itertools.combinations_with_replacement(domain, i)
        if with_repetition
        else itertools.combinations(domain, i)
    )
    for combo in combos:
        acc = 0
        for x in combo:
            acc = add[acc][x]
        counts[acc] += 1
    return counts


def brute_multiset_counts(
    G: GroupSpec, exclude: Iterable[GroupElement], i: int, budget: int | None = None
) -> list[int]:
    """Counts of size-``i`` multisets over ``G \\ exclude``, indexed by sum."""
    return _enumerate(G, exclude, i, True, budget)


def brute_subset_counts(
    G: GroupSpec, exclude: Iterable[GroupElement], i: int, budget: int | None = None
) -> list[int]:
    """Counts of size-``i`` subsets of ``G \\ exclude``, indexed by sum."""
    return _enumerate(G, exclude, i, False, budget)


def brute_multisets(
    G: GroupSpec, exclude: Iterable[GroupElement], i: int, g: GroupElement, budget: int | None = None
) -> int:
    return brute_multiset_counts(G, exclude, i, budget)[G.index(g)]


def brute_subsets(
    G: GroupSpec, exclude: Iterable[GroupElement], i: int, g: GroupElement, budget: int | None = None
) -> int:
    return brute_subset_counts(G, exclude, i, budget)[G.index(g)]


class GroupSeries:
    """Truncated power series with coefficients in the integer group ring ``Z[G]``.

    ``coeffs[j][x]`` is the coefficient of ``X^j`` times the element with
    index ``x``.
    """

    def __init__(self, G: GroupSpec, degree: int):
        if degree < 0:
            raise DomainError(f"truncation degree must be non-negative, got {degree}")
        self.group = G
        self.degree = degree
        self.coeffs = [[0] * G.order for _ in range(degree + 1)]
        self.coeffs[0][0] = 1

    def divide_by_one_minus(self, sigma: GroupElement) -> None:
        """Multiply in place by ``1/(1 - sigma X) = 1 + sigma X + sigma^2 X^2 + ...``."""
        shift = self.group.addition_table[self.group.index(sigma)]
        c = self.coeffs
        for j in range(1, self.degree + 1):
            prev, cur = c[j - 1], c[j]
            for x, value in enumerate(prev):
                if value:
                    cur[shift[x]] += value

    def multiply_by_one_plus(self, sigma: GroupElement) -> None:
        """Multiply in place by ``1 + sigma X``."""
        shift = self.group.addition_table[self.group.index(sigma)]
        c = self.coeffs
        for j in range(self.degree, 0, -1):
            prev, cur = c[j - 1], c[j]
            for x, value in enumerate(prev):
                if value:
                    cur[shift[x]] += value

    def table(self) -> CountTable:
        elems = self.group.element_list
        return {
            (j, elems[x]): value
            for j, row in enumerate(self.coeffs)
            for x, value in enumerate(row)
        }


def _factors(G, exclude, reverse):
    banned = set(exclude)
    sigmas = [s for s in G.element_list if s not in banned]
    return sigmas[::-1] if reverse else sigmas


def series_multiset_table(
    G: GroupSpec, exclude: Iterable[GroupElement], max_size: int, *, reverse: bool = False
) -> CountTable:
    """All multiset counts ``M(G \\ exclude, i, g)`` for ``i <= max_size``."""
    series = GroupSeries(G, max_size)
    for sigma in _factors(G, exclude, reverse):
        series.divide_by_one_minus(sigma)
    return series.table()


def series_subset_table(
    G: GroupSpec, exclude: Iterable[GroupElement], max_size: int, *, reverse: bool = False
) -> CountTable:
    """All subset counts ``N(G \\ exclude, i, g)`` for ``i <= max_size``."""
    series = GroupSeries(G, max_size)
    for sigma in _factors(G, exclude, reverse):
        series.multiply_by_one_plus(sigma)
    return series.table()
