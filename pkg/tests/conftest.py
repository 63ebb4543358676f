import math

import pytest
from hypothesis import strategies as st

from abelsum.groups import GroupSpec, presentations

ACCEPTANCE_LINES: list[str] = []


def small_groups(max_order):
    return presentations(max_order)


@st.composite
def group_specs(draw, max_order=24, max_rank=3):
    orders = []
    budget = max_order
    for _ in range(draw(st.integers(1, max_rank))):
        if budget < 1:
            break
        n = draw(st.integers(1, budget))
        orders.append(n)
        budget //= n
    return GroupSpec(tuple(orders or [1]))


@pytest.fixture
def z4():
    return GroupSpec.cyclic(4)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
