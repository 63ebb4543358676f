"""Cross-check sweep: closed forms vs enumeration vs series vs peeling."""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .closed_form import m_full, n_full, p_parts
from .errors import InvariantViolation
from .groups import GroupSpec, presentations
from .oracle import (
    brute_multiset_counts,
    brute_subset_counts,
    series_multiset_table,
    series_subset_table,
)
from .restricted import ExcludedSet, m_restricted, m_restricted_counts, n_restricted_counts


@dataclass(frozen=True)
class Mismatch:
    check: str
    group: str
    exclude: str
    size: int
    target: str
    expected: object
    got: object

    def __str__(self) -> str:
        return (
            f"{self.check}: group={self.group} S={{{self.exclude}}} i={self.size} "
            f"g={self.target} expected={self.expected} got={self.got}"
        )


@dataclass
class SweepReport:
    groups: int = 0
    checks: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.checks > 0

    def merge(self, other: "SweepReport") -> None:
        self.groups += other.groups
        self.checks += other.checks
        self.mismatches.extend(other.mismatches)

    def lines(self) -> list[str]:
        out = [
            f"groups checked: {self.groups}",
            f"comparisons: {self.checks}",
            f"mismatches: {len(self.mismatches)}",
        ]
        out.extend(str(m) for m in self.mismatches)
        out.append("OK" if self.ok else "FAIL")
        return out


class _Checker:
    def __init__(self, G: GroupSpec):
        self.G = G
        self.report = SweepReport(groups=1)

    def compare(self, check, S, i, g, expected, compute):
        self.report.checks += 1
        try:
            got = compute()
        except InvariantViolation as exc:
            got = f"error: {exc}"
        if got != expected:
            exclude = ";".join(str(u) for u in S)
            self.report.mismatches.append(
                Mismatch(check, str(self.G), exclude, i, str(g), expected, got)
            )


def check_group(G: GroupSpec, max_size: int, max_excluded: int) -> SweepReport:
    """Run every comparison for one group presentation."""
    chk = _Checker(G)
    elems = G.element_list
    zero = (G.zero,)
    series_m = series_multiset_table(G, (), max_size)
    series_n = series_subset_table(G, (), max_size)
    series_p = series_multiset_table(G, zero, max_size)

    for i in range(max_size + 1):
        brute_m = brute_multiset_counts(G, (), i)
        brute_n = brute_subset_counts(G, (), i)
        brute_p = brute_multiset_counts(G, zero, i)
        for x, g in enumerate(elems):
            chk.compare("M=brute", (), i, g, brute_m[x], lambda: m_full(G, i, g))
            chk.compare("M=series", (), i, g, series_m[(i, g)], lambda: m_full(G, i, g))
            chk.compare("N=brute", (), i, g, brute_n[x], lambda: n_full(G, i, g))
            chk.compare("N=series", (), i, g, series_n[(i, g)], lambda: n_full(G, i, g))
            chk.compare("P=brute", zero, i, g, brute_p[x], lambda: p_parts(G, i, g))
            chk.compare("P=series", zero, i, g, series_p[(i, g)], lambda: p_parts(G, i, g))

    for k in range(1, min(max_excluded, G.order) + 1):
        for chosen in itertools.combinations(elems, k):
            S = ExcludedSet(G, chosen)
            for i in range(max_size + 1):
                brute_m = brute_multiset_counts(G, S, i)
                brute_n = brute_subset_counts(G, S, i)
                peeled = m_restricted_counts(S, i)
                subsets = n_restricted_counts(S, i)
                for x, g in enumerate(elems):
                    chk.compare("M(G-S)=brute", S, i, g, brute_m[x], lambda: m_restricted(S, i, g))
                    chk.compare("M(G-S)=peel", S, i, g, brute_m[x], lambda: peeled[x])
                    chk.compare("N(G-S)=brute", S, i, g, brute_n[x], lambda: subsets[x])
    return chk.report


def _check_group_args(args):
    return check_group(*args)


def run_sweep(max_order: int, max_size: int, max_excluded: int, jobs: int = 1) -> SweepReport:
    """Check every presentation of order <= ``max_order``; results in group order."""
    tasks = [(G, max_size, max_excluded) for G in presentations(max_order)]
    report = SweepReport()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_check_group_args, tasks))
    else:
        parts = [check_group(*t) for t in tasks]
    for part in parts:
        report.merge(part)
    return report
