"""Resource budgets with GSC_BUDGET_* environment overrides."""

import os
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Budgets:
    max_cover_vertices: int = 20000      # hard cap on constructed cover totals
    max_cover_iterations: int = 16       # z2 iteration cap per level
    max_ball_elements: int = 250000      # Cayley ball truncation threshold
    max_group_order: int = 4096          # quotient Cayley graph closure cap
    quotient_max_nodes: int = 5_000_000  # search_quotient DFS node budget
    quotient_time_seconds: float = 0.0   # optional wall-clock cap (0 = off)
    closure_cap: int = 4096              # equal-length word closure cap in ball dedup

    def with_env(self):
        """Return a copy with GSC_BUDGET_<FIELD> environment overrides applied."""
        updates = {}
        for f in fields(self):
            raw = os.environ.get("GSC_BUDGET_" + f.name.upper())
            if raw is not None:
                updates[f.name] = type(getattr(self, f.name))(raw)
        return replace(self, **updates) if updates else self


DEFAULT_BUDGETS = Budgets()
