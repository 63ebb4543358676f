"""Counting over restricted domains ``G \\ S``.

Three routes:

* ``m_restricted`` -- inclusion-exclusion over the subsets of ``S``, aggregated
  by subset sum, subtracted from the full-group count;
* ``m_restricted_peel`` -- an independent recursion that removes the elements
  of ``S`` one at a time using ``M(D,i,g) = M(D-{u},i,g) + M(D,i-1,g-u)``;
* ``n_restricted`` -- the subset analogue of the peeling recursion,
  ``N(D,i,g) = N(D-{u},i,g) + N(D-{u},i-1,g-u)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .closed_form import m_full, n_full
from .errors import DomainError, InvariantViolation
from .groups import GroupElement, GroupSpec, as_sequence


@dataclass(frozen=True)
class ExcludedSet:
    """A set of distinct elements removed from ``group``; stored sorted."""

    group: GroupSpec
    elements: tuple[GroupElement, ...] = ()

    def __post_init__(self):
        elems = as_sequence(self.group, self.elements)
        self.group._check(*elems)
        object.__setattr__(self, "elements", tuple(sorted(set(elems))))

    @classmethod
    def of(cls, G: GroupSpec, items: Iterable[GroupElement | int | Sequence[int]]) -> "ExcludedSet":
        return cls(G, tuple(items))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.elements


def subset_sum_table(S: ExcludedSet) -> list[list[int]]:
    """``c[t][x]`` = number of ``t``-element subsets of ``S`` whose sum has index ``x``.

    Row 0 is the seed ``[sum of empty set = 0]``; rows run up to ``|S|``.
    """
    G = S.group
    k = len(S)
    c = [[0] * G.order for _ in range(k + 1)]
    c[0][0] = 1
    add = G.addition_table
    for processed, u in enumerate(S.elements):
        shift = add[G.index(u)]
        # descending t so each u is used at most once
        for t in range(processed + 1, 0, -1):
            prev, cur = c[t - 1], c[t]
            for x, value in enumerate(prev):
                if value:
                    cur[shift[x]] += value
    return c


def _full_by_class(G: GroupSpec, full: Callable[[GroupSpec, int, GroupElement], int]):
    """Memoise a full-group count on ``(size, e(target))``."""
    elems = G.element_list
    e_index = G.e_values
    rep = {}
    for h, e in zip(elems, e_index):
        rep.setdefault(e, h)
    cache: dict[tuple[int, int], int] = {}

    def lookup(i: int, x: int) -> int:
        key = (i, e_index[x])
        if key not in cache:
            cache[key] = full(G, i, rep[e_index[x]])
        return cache[key]

    return lookup


def _check_target(S: ExcludedSet, i: int, g: GroupElement) -> None:
    S.group._check(g)
    if i < 0:
        raise DomainError(f"size must be non-negative, got {i}")


def m_hit(S: ExcludedSet, i: int, g: GroupElement) -> int:
    """Size-``i`` multisets over ``G`` summing to ``g`` that meet ``S``."""
    _check_target(S, i, g)
    if i < 1:
        raise DomainError(f"m_hit needs size >= 1, got {i}")
    if not len(S):
        raise DomainError("m_hit needs a nonempty excluded set")
    G = S.group
    c = subset_sum_table(S)
    full = _full_by_class(G, m_full)
    add = G.addition_table
    gx = G.index(g)
    neg_h = [G.index(-h) for h in G.element_list]
    total = 0
    for t in range(1, min(i, len(S)) + 1):
        inner = 0
        for hx, weight in enumerate(c[t]):
            if weight:
                inner += weight * full(i - t, add[gx][neg_h[hx]])
        total += inner if t % 2 else -inner
    if total < 0 or total > m_full(G, i, g):
        raise InvariantViolation(f"inclusion-exclusion gave {total}, outside [0, M(G,{i},{g})]")
    return total


def m_restricted(S: ExcludedSet, i: int, g: GroupElement) -> int:
    """Size-``i`` multisets over ``G \\ S`` summing to ``g``."""
    _check_target(S, i, g)
    if i == 0:
        return int(g.is_zero)
    full = m_full(S.group, i, g)
    if not len(S):
        return full
    count = full - m_hit(S, i, g)
    if count < 0:
        raise InvariantViolation(f"negative restricted count {count}")
    return count


def _peel(S: ExcludedSet, i: int, full, subsets: bool) -> list[int]:
    """Counts for ``G \\ S`` at size ``i``, indexed by target.

    Each level removes one more element ``u`` of ``S`` from the domain ``D``:

        multisets: M(D-u, j, x) = M(D, j, x) - M(D,   j-1, x-u)
        subsets:   N(D-u, j, x) = N(D, j, x) - N(D-u, j-1, x-u)
    """
    G = S.group
    n = G.order
    add = G.addition_table
    zero_row = [1] + [0] * (n - 1)
    # level 0: full group
    prev_level = [zero_row] + [[full(j, x) for x in range(n)] for j in range(1, i + 1)]
    for u in S.elements:
        minus_u = add[G.index(-u)]
        level = [zero_row]
        for j in range(1, i + 1):
            # row of size j-1 that the recursion subtracts
            lower = level[j - 1] if subsets else prev_level[j - 1]
            row = [prev_level[j][x] - lower[minus_u[x]] for x in range(n)]
            level.append(row)
        prev_level = level
    return prev_level[i]


def m_restricted_peel(S: ExcludedSet, i: int, g: GroupElement) -> int:
    """Independent route to ``m_restricted`` by removing ``S`` one element at a time."""
    _check_target(S, i, g)
    counts = _peel(S, i, _full_by_class(S.group, m_full), subsets=False)
    count = counts[S.group.index(g)]
    if count < 0:
        raise InvariantViolation(f"negative peeled count {count}")
    return count


def n_restricted(S: ExcludedSet, i: int, g: GroupElement) -> int:
    """Size-``i`` subsets of ``G \\ S`` summing to ``g``."""
    _check_target(S, i, g)
    counts = _peel(S, i, _full_by_class(S.group, n_full), subsets=True)
    count = counts[S.group.index(g)]
    if count < 0:
        raise InvariantViolation(f"negative subset count {count}")
    return count


def m_restricted_counts(S: ExcludedSet, i: int) -> list[int]:
    """Peeled multiset counts over ``G \\ S`` at size ``i`` for every target, in element order."""
    if i < 0:
        raise DomainError(f"size must be non-negative, got {i}")
    return _peel(S, i, _full_by_class(S.group, m_full), subsets=False)


def n_restricted_counts(S: ExcludedSet, i: int) -> list[int]:
    """Subset counts over ``G \\ S`` at size ``i`` for every target, in element order."""
    if i < 0:
        raise DomainError(f"size must be non-negative, got {i}")
    return _peel(S, i, _full_by_class(S.group, n_full), subsets=True)
