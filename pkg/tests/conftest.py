from __future__ import annotations

import functools
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from strongclosed import Permutation  # noqa: E402
from strongclosed.harness.catalog import builtin_catalog, lookup  # noqa: E402


@functools.lru_cache(maxsize=None)
def group(gid: str):
    """Catalog group, built once per test session."""
    return lookup(gid).group


def ids_up_to(n: int, exclude: tuple[str, ...] = ()) -> list[str]:
    return [e.id for e in builtin_catalog() if e.order <= n and e.id not in exclude]


def as_set(H) -> frozenset:
    """Elements of a Group or Subgroup as 0-based tuples."""
    return frozenset(p.array_form for p in H.elements())


def perm(text: str, degree: int) -> Permutation:
    return Permutation.parse(text, degree)


@pytest.fixture(scope="session")
def S4():
    return group("S4")


@pytest.fixture(scope="session")
def SL2_17():
    return group("SL2_17")


# Acceptance criteria record their outcome here; the summary hook prints one line each.
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, note = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}  ({note})")
