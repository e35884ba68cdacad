"""Size limits.

Every bound is configuration: functions take an explicit override and fall
back to :data:`BOUNDS`.  ``FUSIONKIT_MAX_ORDER`` in the environment replaces
the closure bound at import time.
"""

from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass
class Bounds:
    max_order: int = 10_000  # closure of generators
    max_subgroup_order: int = 2_000  # enumerate_subgroups / strongly_p_embedded
    max_hom_domain: int = 64  # homomorphism search
    max_search_nodes: int = 2_000_000
    max_census_assignments: int = 4_096
    max_closure_subsets: int = 1 << 16


BOUNDS = Bounds()

_env = os.environ.get("FUSIONKIT_MAX_ORDER")
if _env:
    BOUNDS.max_order = int(_env)
