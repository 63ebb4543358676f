"""Exact counts of subsets, multisets and partitions with a prescribed sum
over finite abelian groups."""
from .closed_form import m_coprime_fastpath, m_full, m_prime_power, n_full, p_parts
from .errors import BudgetExceeded, DomainError, InvariantViolation, ParseError
from .groups import GroupElement, GroupSpec
from .restricted import ExcludedSet, m_hit, m_restricted, m_restricted_peel, n_restricted

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "ExcludedSet",
    "GroupElement",
    "GroupSpec",
    "InvariantViolation",
    "ParseError",
    "m_coprime_fastpath",
    "m_full",
    "m_hit",
    "m_prime_power",
    "m_restricted",
    "m_restricted_peel",
    "n_full",
    "n_restricted",
    "p_parts",
]
