"""Node budgets that keep exhaustive searches from hanging."""

from __future__ import annotations

import os

from .errors import SearchBudgetExceeded

DEFAULT_SEARCH_BUDGET = 10_000_000
ENV_VAR = "SYMQ_BUDGET"


def resolve_budget(value: int | None = None) -> int:
    """Pick the budget: explicit value, then SYMQ_BUDGET, then the default."""
    if value is not None:
        return int(value)
    env = os.environ.get(ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{ENV_VAR} is not an integer: {env!r}") from None
    return DEFAULT_SEARCH_BUDGET


class SearchBudget:
    """Counts search nodes and raises once the limit is crossed."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        self.limit = resolve_budget(limit)
        self.used = 0

    def spend(self, nodes: int = 1) -> None:
        self.used += nodes
        if self.used > self.limit:
            raise SearchBudgetExceeded(self.limit)
