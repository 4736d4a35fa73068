"""Strong closure, the H-subgroup condition, and the theorem hypotheses built on them.

``H <= K <= G`` is strongly closed in ``K`` with respect to ``G`` when no
``G``-conjugate of an element of ``H`` lands in ``K`` outside ``H``. "Strongly
closed in ``G``" takes ``K = N_G(H)``. Both are evaluated class by class: the
conjugates of ``a`` are exactly its ``G``-conjugacy class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import InvalidParameter, NotNormal
from .group import (
    GroupLike,
    Subgroup,
    _require_le,
    as_subgroup,
    conjugacy_labels,
    conjugate_subgroup,
    conjugating_element,
    is_normal,
    normalizer,
    right_transversal,
)
from .numtheory import prime_factors
from .structure import Outcome
from .subgroups import Shape, shape, subgroups_of_order, sylow_subgroup

Reading = Literal["normalizer", "sylow"]
READINGS = ("normalizer", "sylow")
THEOREMS = ("T1", "T2", "T3", "T4", "P31")


def is_strongly_closed(H: Subgroup, K: Subgroup, G: GroupLike) -> Outcome:
    """Witness on failure: ``(a, g)`` with ``a`` in ``H`` and ``a^g`` in ``K`` but not ``H``."""
    G = as_subgroup(G)
    _require_le(H, K)
    _require_le(K, G)
    labels = conjugacy_labels(G)
    hit = np.isin(labels[K.idx], np.unique(labels[H.idx]))
    bad = K.idx[hit & ~H.mask[K.idx]]
    if not bad.size:
        return Outcome(True)
    b = int(bad[0])
    a = int(H.idx[labels[H.idx] == labels[b]][0])
    g = conjugating_element(G, a, b)
    U = G.universe
    return Outcome(False, (U.perm(a), U.perm(g)))


def is_strongly_closed_in_G(H: Subgroup, G: GroupLike) -> Outcome:
    G = as_subgroup(G)
    _require_le(H, G)
    return is_strongly_closed(H, normalizer(G, H), G)


def is_h_subgroup(H: Subgroup, G: GroupLike) -> Outcome:
    """``H^g ∩ N_G(H) <= H`` for all ``g``, checked literally on one ``g`` per coset ``N_G(H) g``.

    Witness on failure: ``(g, b)`` with ``b`` in ``H^g ∩ N_G(H)`` outside ``H``.
    """
    G = as_subgroup(G)
    _require_le(H, G)
    U = G.universe
    N = normalizer(G, H)
    for g in right_transversal(G, N):
        conj = U.conj(H.idx, g)
        bad = conj[N.mask[conj] & ~H.mask[conj]]
        if bad.size:
            return Outcome(False, (U.perm(g), U.perm(int(bad.min()))))
    return Outcome(True)


def sylow_containing(G: Subgroup, H: Subgroup) -> Subgroup:
    """The first Sylow subgroup (over a transversal of its normalizer) containing the p-group ``H``."""
    fs = prime_factors(H.order)
    if len(fs) != 1:
        raise InvalidParameter("a Sylow subgroup containing H needs H to be a nontrivial p-group")
    S = sylow_subgroup(G, fs[0])
    for g in right_transversal(G, normalizer(G, S)):
        C = conjugate_subgroup(S, g)
        if H <= C:
            return C
    raise AssertionError("every p-subgroup lies in some Sylow subgroup")


def strongly_closed(H: Subgroup, G: Subgroup, reading: Reading = "normalizer", P: Subgroup | None = None) -> Outcome:
    """Strong closure "in G" under the chosen reading.

    ``normalizer``: closed in ``N_G(H)`` w.r.t. ``G``. ``sylow``: closed in a
    Sylow subgroup containing ``H`` w.r.t. ``G`` (``P`` when it contains ``H``).
    """
    if reading == "normalizer":
        return is_strongly_closed_in_G(H, G)
    if reading == "sylow":
        if H.order == 1:
            return Outcome(True)
        if P is None or not H <= P:
            P = sylow_containing(G, H)
        return is_strongly_closed(H, P, G)
    raise InvalidParameter(f"unknown reading {reading!r}")


@dataclass(frozen=True)
class HypothesisSpec:
    theorem_id: str
    target_order: int | None = None
    include_order4_clause: bool = True
    normal_subgroup_E: Subgroup | None = None
    reading: Reading = "normalizer"

    def __post_init__(self):
        if self.theorem_id not in THEOREMS:
            raise InvalidParameter(f"unknown theorem id {self.theorem_id!r}")


def valid_target_orders(P: Subgroup, p: int, strict_two: bool = False) -> list[int]:
    """Orders ``p^k`` with ``1 < p^k < |P|`` (``2 < |D|`` when ``strict_two``)."""
    out = []
    d = p
    while d < P.order:
        if not (strict_two and d == 2):
            out.append(d)
        d *= p
    return out


def order_condition(G: Subgroup, P: Subgroup, d: int, clause: bool = True,
                    reading: Reading = "normalizer") -> Outcome:
    """Every subgroup of ``P`` of order ``d`` (and of order 4 when ``d == 2`` and
    ``clause``) is strongly closed. Witness: ``(failing subgroup, (a, g))``."""
    orders = [d]
    if clause and d == 2 and P.order % 4 == 0:
        orders.append(4)
    for n in orders:
        for H in subgroups_of_order(P, n):
            r = strongly_closed(H, G, reading, P)
            if not r:
                return Outcome(False, (H, r.witness))
    return Outcome(True)


def _sylow_branch(G: Subgroup, P: Subgroup, p: int, spec: HypothesisSpec, strict_two: bool) -> Outcome:
    if shape(P) is Shape.CYCLIC:
        return Outcome(True, "cyclic")
    valid = valid_target_orders(P, p, strict_two)
    d = spec.target_order
    if d is None or d not in valid:
        raise InvalidParameter(f"target order {d} is not valid for a non-cyclic Sylow subgroup of order {P.order}")
    clause = spec.include_order4_clause and spec.theorem_id != "P31"
    return order_condition(G, P, d, clause, spec.reading)


def exists_target_order(G: Subgroup, P: Subgroup, p: int, spec: HypothesisSpec) -> Outcome:
    """Some valid ``|D|`` satisfies the order condition; witness lists the ones that do."""
    good = [d for d in valid_target_orders(P, p)
            if order_condition(G, P, d, spec.include_order4_clause, spec.reading)]
    return Outcome(bool(good), good)


def theorem_hypothesis(G: GroupLike, spec: HypothesisSpec) -> Outcome:
    """Evaluate the hypothesis of the selected theorem on ``G``.

    T1/P31 use the Sylow 2-subgroup, T2 the smallest prime divisor, T3 every
    non-cyclic Sylow subgroup of ``G`` and T4 every non-cyclic Sylow subgroup
    of the normal subgroup ``E`` (strong closure always taken in ``G``).
    """
    G = as_subgroup(G)
    tid = spec.theorem_id
    if tid in ("T1", "P31"):
        return _sylow_branch(G, sylow_subgroup(G, 2), 2, spec, strict_two=tid == "P31")
    if tid == "T2":
        if G.order == 1:
            return Outcome(True, "trivial")
        p = prime_factors(G.order)[0]
        return _sylow_branch(G, sylow_subgroup(G, p), p, spec, strict_two=False)
    if tid == "T3":
        E = G
    else:
        E = spec.normal_subgroup_E
        if E is None:
            raise InvalidParameter("T4 needs a normal subgroup E")
        _require_le(E, G)
        if not is_normal(G, E):
            raise NotNormal("E must be normal in G")
    report = {}
    for p in prime_factors(E.order):
        P = sylow_subgroup(E, p)
        if shape(P) is Shape.CYCLIC:
            report[p] = "cyclic"
            continue
        r = exists_target_order(G, P, p, spec)
        if not r:
            return Outcome(False, {"prime": p, "sylow": P})
        report[p] = r.witness
    return Outcome(True, report)
