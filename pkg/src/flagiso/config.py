"""Search caps and budgets.

The algorithms here are exact and exhaustive, so every potentially expensive
enumeration is gated by an explicit cap.  Budgets for the tuple enumeration can
be raised per run through the FLAGISO_BUDGET environment variable.
"""

from __future__ import annotations

import os

# subgroup lattice enumeration refuses groups above this order
SUBGROUP_ENUM_CAP = 24

# backtracking search for group isomorphisms refuses domains above this order
ISO_SEARCH_CAP = 16

# default ceiling on |G|**n when enumerating all degree tuples
DEFAULT_CLASSIFY_BUDGET = 100_000

# cross-validation of a class table by pairwise isomorphism calls is skipped
# once the number of required calls exceeds this
DEFAULT_PAIR_BUDGET = 2_000

BUDGET_ENV_VAR = "FLAGISO_BUDGET"


def classify_budget(explicit: int | None = None) -> int:
    """Resolve the tuple-enumeration budget: argument, then env var, then default."""
    if explicit is not None:
        return explicit
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is not None:
        try:
            return int(raw)
        except ValueError:
            from .errors import InvalidInput

            raise InvalidInput(
                f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}",
                code="invalid-budget",
            )
    return DEFAULT_CLASSIFY_BUDGET
