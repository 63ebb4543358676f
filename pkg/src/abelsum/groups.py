"""Finite abelian groups given as direct products of cyclic groups.

A group is presented by its list of cyclic factor orders, ``Z_{n_1} x ... x Z_{n_k}``.
No canonicalisation is attempted: every quantity the counting formulas need
(order, exponent, torsion sizes, ``e(g)``) is independent of the presentation.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParseError
from .numtheory import divisors

_INT64_MAX = 2**63 - 1


@dataclass(frozen=True, order=True)
class GroupSpec:
    """A finite abelian group ``Z_{n_1} x ... x Z_{n_k}``."""

    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(n) for n in self.orders)
        if not orders:
            raise DomainError("a group needs at least one cyclic factor")
        for n in orders:
            if n < 1 or n > _INT64_MAX:
                raise DomainError(f"cyclic factor order out of range: {n}")
        object.__setattr__(self, "orders", orders)

    @classmethod
    def cyclic(cls, n: int) -> "GroupSpec":
        return cls((n,))

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse ``Z4``, ``Z4xZ6`` or ``4x6``."""
        text = text.strip()
        if not text:
            raise ParseError("empty group spec", text)
        orders = []
        for token in text.split("x"):
            m = re.fullmatch(r"\s*[Zz]?(\d+)\s*", token)
            if m is None:
                raise ParseError("bad cyclic factor", token)
            n = int(m.group(1))
            if n < 1:
                raise ParseError("cyclic factor order must be positive", token)
            orders.append(n)
        return cls(tuple(orders))

    def __str__(self) -> str:
        return "x".join(f"Z{n}" for n in self.orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @cached_property
    def order(self) -> int:
        return math.prod(self.orders)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.orders)

    def torsion_size(self, d: int) -> int:
        """Size of the d-torsion subgroup ``{h : d*h = 0}``.

        In ``Z_m`` the solutions of ``d*h = 0`` are the multiples of
        ``m / gcd(d, m)``, so there are ``gcd(d, m)`` of them; the product
        over factors gives the answer for the whole group.
        """
        if d <= 0:
            raise DomainError(f"torsion index must be positive, got {d}")
        return math.prod(math.gcd(d, n) for n in self.orders)

    def in_multiple_subgroup(self, d: int, g: "GroupElement") -> bool:
        """True iff ``g`` lies in ``dG = {d*h : h in G}``."""
        self._check(g)
        return all(r % math.gcd(d, n) == 0 for r, n in zip(g.residues, self.orders))

    def e_of(self, g: "GroupElement") -> int:
        """Largest divisor ``d`` of the exponent with ``g`` in ``dG``."""
        self._check(g)
        for d in reversed(divisors(self.exponent)):
            if self.in_multiple_subgroup(d, g):
                return d
        raise AssertionError("unreachable: every g lies in 1*G")

    @cached_property
    def e_values(self) -> tuple[int, ...]:
        """``e_of`` for every element, in ``elements()`` order."""
        return tuple(self.e_of(h) for h in self.element_list)

    # -- elements -------------------------------------------------------

    @cached_property
    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def element(self, residues: int | Iterable[int]) -> "GroupElement":
        """Build an element, reducing residues modulo the factor orders."""
        if isinstance(residues, int):
            residues = (residues,)
        residues = tuple(residues)
        if len(residues) != self.rank:
            raise DomainError(
                f"element has {len(residues)} residues, group {self} has {self.rank} factors"
            )
        return GroupElement(self, tuple(r % n for r, n in zip(residues, self.orders)))

    def parse_element(self, text: str) -> "GroupElement":
        """Parse ``1,3`` (or a bare ``3`` for a cyclic group)."""
        tokens = [t.strip() for t in text.split(",")]
        values = []
        for token in tokens:
            try:
                values.append(int(token))
            except ValueError:
                raise ParseError("bad residue", token) from None
        if len(values) != self.rank:
            raise ParseError(f"expected {self.rank} residue(s) for {self}", text)
        return self.element(values)

    def elements(self) -> Iterator["GroupElement"]:
        """All elements, in lexicographic residue order."""
        for residues in itertools.product(*(range(n) for n in self.orders)):
            yield GroupElement(self, residues)

    @cached_property
    def element_list(self) -> tuple["GroupElement", ...]:
        return tuple(self.elements())

    def index(self, g: "GroupElement") -> int:
        """Position of ``g`` in ``elements()`` (mixed radix, last factor fastest)."""
        self._check(g)
        idx = 0
        for r, n in zip(g.residues, self.orders):
            idx = idx * n + r
        return idx

    @cached_property
    def addition_table(self) -> tuple[tuple[int, ...], ...]:
        """``addition_table[a][b]`` is the index of ``element_list[a] + element_list[b]``."""
        elems = self.element_list
        return tuple(tuple(self.index(self.add(a, b)) for b in elems) for a in elems)

    # -- arithmetic -----------------------------------------------------

    def _check(self, *items: "GroupElement") -> None:
        for g in items:
            if not isinstance(g, GroupElement) or g.group != self:
                raise DomainError(f"{g!r} is not an element of {self}")

    def add(self, a: "GroupElement", b: "GroupElement") -> "GroupElement":
        self._check(a, b)
        return GroupElement(
            self, tuple((x + y) % n for x, y, n in zip(a.residues, b.residues, self.orders))
        )

    def neg(self, a: "GroupElement") -> "GroupElement":
        self._check(a)
        return GroupElement(self, tuple(-x % n for x, n in zip(a.residues, self.orders)))

    def sub(self, a: "GroupElement", b: "GroupElement") -> "GroupElement":
        return self.add(a, self.neg(b))

    def scale(self, d: int, a: "GroupElement") -> "GroupElement":
        self._check(a)
        return GroupElement(self, tuple(d * x % n for x, n in zip(a.residues, self.orders)))

    def total(self, items: Iterable["GroupElement"]) -> "GroupElement":
        acc = self.zero
        for g in items:
            acc = self.add(acc, g)
        return acc


@dataclass(frozen=True, order=True)
class GroupElement:
    """A residue vector tied to its owning group. Build via ``GroupSpec.element``."""

    group: GroupSpec
    residues: tuple[int, ...]

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.residues)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return self.group.add(self, other)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self.group.sub(self, other)

    def __neg__(self) -> "GroupElement":
        return self.group.neg(self)

    @property
    def is_zero(self) -> bool:
        return not any(self.residues)


# Module-level spellings of the group invariants.

def order(G: GroupSpec) -> int:
    return G.order


def exponent(G: GroupSpec) -> int:
    return G.exponent


def torsion_size(G: GroupSpec, d: int) -> int:
    return G.torsion_size(d)


def e_of(G: GroupSpec, g: GroupElement) -> int:
    return G.e_of(g)


def presentations(max_order: int) -> list[GroupSpec]:
    """Every presentation by a non-decreasing list of cyclic orders >= 2 with
    product at most ``max_order``, plus the trivial group ``Z1``.

    ``Z2xZ4`` appears but ``Z4xZ2`` does not; isomorphic presentations such as
    ``Z6`` and ``Z2xZ3`` both appear.
    """
    found: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], smallest: int, budget: int) -> None:
        for n in range(smallest, budget + 1):
            orders = prefix + (n,)
            found.append(orders)
            extend(orders, n, budget // n)

    if max_order >= 1:
        found.append((1,))
    extend((), 2, max_order)
    found.sort(key=lambda orders: (math.prod(orders), orders))
    return [GroupSpec(orders) for orders in found]


def parse_elements(G: GroupSpec, text: str) -> list[GroupElement]:
    """Parse a ``;``-separated list of elements, e.g. ``0,1;1,2``."""
    text = text.strip()
    if not text:
        return []
    return [G.parse_element(token) for token in text.split(";")]


def as_sequence(G: GroupSpec, items: Sequence[GroupElement | int | Sequence[int]]) -> list[GroupElement]:
    """Coerce a mix of elements, ints and residue tuples into elements of ``G``."""
    return [x if isinstance(x, GroupElement) else G.element(x) for x in items]
