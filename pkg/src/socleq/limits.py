"""Resource budgets threaded through the heavier computations."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    """Engine budgets.

    step_budget    - Buchberger reduction steps per basis computation
    trunc_k_budget - largest truncation level tried while waiting for
                     quotient dimensions to stabilize
    dim_cap        - hard cap on truncated-quotient dimensions
    """

    step_budget: int = 10_000_000
    trunc_k_budget: int = 40
    dim_cap: int = 20_000

    def with_overrides(self, step_budget=None, trunc_k_budget=None, dim_cap=None) -> "Limits":
        out = self
        if step_budget is not None:
            out = replace(out, step_budget=step_budget)
        if trunc_k_budget is not None:
            out = replace(out, trunc_k_budget=trunc_k_budget)
        if dim_cap is not None:
            out = replace(out, dim_cap=dim_cap)
        return out


DEFAULT_LIMITS = Limits()
