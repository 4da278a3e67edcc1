"""Budget defaults shared across modules."""

from __future__ import annotations

import os

ENUMERATION_BUDGET = 200_000
REVERSING_BUDGET = 1_000_000
SC_BUDGET = 100_000
ROOT_DEPTH = 16


def enumeration_budget(override: int | None = None) -> int:
    """Cap on enumerated group elements; ``GARSIDE_KIT_BUDGET`` overrides the default."""
    if override is not None:
        return override
    env = os.environ.get("GARSIDE_KIT_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return ENUMERATION_BUDGET
