"""Enumeration limits shared by the engine and the harness.

Every operation that must look at all elements (or all subgroups) of a group
consults these limits and raises ``EnumerationBoundExceeded`` above them.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass, replace


@dataclass
class Bounds:
    elements: int = 10_000          # full element enumeration
    lattice: int = 2_000            # all_subgroups / normal-subgroup lattice
    pgroup_subgroups: int = 4_096   # subgroups_of_order on p-groups
    components: int = 5_000         # component search in fitting_data
    table: int = 2_048              # precomputed multiplication table


BOUNDS = Bounds()


@contextlib.contextmanager
def bounds(**overrides):
    """Temporarily override fields of the global ``BOUNDS``."""
    saved = replace(BOUNDS)
    for k, v in overrides.items():
        if not hasattr(saved, k):
            raise AttributeError(k)
        setattr(BOUNDS, k, v)
    try:
        yield BOUNDS
    finally:
        for k in overrides:
            setattr(BOUNDS, k, getattr(saved, k))
