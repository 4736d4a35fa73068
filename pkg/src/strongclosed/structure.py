"""Structural properties: p-nilpotence, cores, Fitting data, chief series, supersolvability."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import bounds as _bounds
from .errors import EnumerationBoundExceeded, HypothesisViolation, InvalidParameter
from .group import (
    GroupLike,
    Subgroup,
    as_subgroup,
    center,
    conjugacy_class_reps,
    conjugate_subgroup,
    generate,
    intersection,
    is_normal,
    join,
    normal_closure,
    normalizer,
    right_transversal,
)
from .numtheory import is_prime, p_part, prime_factors
from .subgroups import is_p_group, normal_subgroups, sylow_subgroup


@dataclass(frozen=True)
class Outcome:
    """A boolean answer with an optional witness; truthy iff ``holds``."""

    holds: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.holds


def is_p_nilpotent(G: GroupLike, p: int) -> Outcome:
    """Normal p-complement test via ``K = <elements of order prime to p>``.

    ``G`` is p-nilpotent iff p does not divide ``|K|``; the witness is then
    ``K`` itself (the normal complement), otherwise ``K`` shows the failure.
    """
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    G = as_subgroup(G)
    U = G.universe
    coprime = G.idx[U.orders[G.idx] % p != 0]
    K = generate(G.parent, coprime.tolist())
    return Outcome(K.order % p != 0, K)


def p_core(G: GroupLike, p: int) -> Subgroup:
    """``O_p(G)``: the largest normal p-subgroup."""
    G = as_subgroup(G)
    cand = [N for N in normal_subgroups(G) if is_p_group(N, p)]
    best = G.parent.trivial()
    for N in cand:
        best = join(best, N)
    return best


def p_prime_core(G: GroupLike, p: int) -> Subgroup:
    """``O_{p'}(G)``: the largest normal subgroup of order prime to p."""
    G = as_subgroup(G)
    best = G.parent.trivial()
    for N in normal_subgroups(G):
        if N.order % p:
            best = join(best, N)
    return best


def derived_subgroup(G: GroupLike) -> Subgroup:
    G = as_subgroup(G)
    U = G.universe
    g = np.array(G.gens, dtype=np.int64)
    if g.size < 2:
        return G.parent.trivial()
    comms = np.unique(U.comm(g[:, None], g[None, :]).ravel())
    return normal_closure(G, generate(G.parent, comms.tolist()))


def is_perfect(G: GroupLike) -> bool:
    G = as_subgroup(G)
    return derived_subgroup(G) == G


def is_solvable(G: GroupLike) -> bool:
    H = as_subgroup(G)
    while H.order > 1:
        D = derived_subgroup(H)
        if D == H:
            return False
        H = D
    return True


def is_nilpotent(G: GroupLike) -> bool:
    """All Sylow subgroups normal."""
    G = as_subgroup(G)
    return all(is_normal(G, sylow_subgroup(G, p)) for p in prime_factors(G.order))


def is_simple(G: GroupLike) -> bool:
    G = as_subgroup(G)
    if G.order == 1:
        return False
    for x in conjugacy_class_reps(G):
        if x and normal_closure(G, generate(G.parent, [x])) != G:
            return False
    return True


def is_quasisimple(K: Subgroup) -> bool:
    """Perfect with ``K/Z(K)`` simple: every non-central element normally generates ``K``."""
    if K.order == 1 or not is_perfect(K):
        return False
    Z = center(K)
    for x in conjugacy_class_reps(K):
        if Z.mask[x]:
            continue
        if normal_closure(K, generate(K.parent, [x])) != K:
            return False
    return True


def _maximal_normal(G: Subgroup) -> list[Subgroup]:
    proper = [N for N in normal_subgroups(G) if N.order < G.order]
    return [N for N in proper if not any(N < M for M in proper)]


def components(G: GroupLike) -> list[Subgroup]:
    """Subnormal quasisimple subgroups, found through maximal normal subgroups."""
    G = as_subgroup(G)
    if G.order > _bounds.BOUNDS.components:
        raise EnumerationBoundExceeded(f"order {G.order} exceeds the component bound")
    found: dict[bytes, Subgroup] = {}
    seen: set[bytes] = set()

    def visit(H: Subgroup) -> None:
        if H.key in seen or H.order == 1:
            return
        seen.add(H.key)
        if is_quasisimple(H):
            found[H.key] = H
            return
        for M in _maximal_normal(H):
            visit(M)

    visit(G)
    return sorted(found.values(), key=Subgroup.sort_key)


@dataclass
class FittingData:
    fitting: Subgroup
    p_cores: dict = field(default_factory=dict)
    components: list = field(default_factory=list)
    layer: Subgroup | None = None
    generalized_fitting: Subgroup | None = None


def fitting_data(G: GroupLike) -> FittingData:
    G = as_subgroup(G)
    F = G.parent.trivial()
    cores = {}
    for p in prime_factors(G.order):
        Op = p_core(G, p)
        cores[p] = Op
        cores[(p, "prime")] = p_prime_core(G, p)
        F = join(F, Op)
    comps = components(G)
    E = G.parent.trivial()
    for C in comps:
        E = join(E, C)
    return FittingData(F, cores, comps, E, join(F, E))


def fitting_subgroup(G: GroupLike) -> Subgroup:
    G = as_subgroup(G)
    F = G.parent.trivial()
    for p in prime_factors(G.order):
        F = join(F, p_core(G, p))
    return F


@dataclass
class ChiefSeries:
    terms: list[Subgroup]

    @property
    def factor_orders(self) -> list[int]:
        return [b.order // a.order for a, b in zip(self.terms, self.terms[1:])]


def minimal_normal_over(G: Subgroup, N: Subgroup) -> Subgroup:
    """A normal subgroup ``M > N`` of ``G`` with ``M/N`` minimal normal in ``G/N``.

    Candidates are ``N <x^G>`` for class representatives ``x`` outside ``N``;
    ties among the minimal ones go to the smallest canonical key.
    """
    cands: dict[bytes, Subgroup] = {}
    for x in conjugacy_class_reps(G):
        if N.mask[x]:
            continue
        M = normal_closure(G, join(N, [x]))
        cands.setdefault(M.key, M)
    vals = sorted(cands.values(), key=Subgroup.sort_key)
    minimal = [M for M in vals if not any(K < M for K in vals)]
    return minimal[0]


def chief_series(G: GroupLike, bottom: Subgroup | None = None) -> ChiefSeries:
    """Chief series of ``G`` from ``bottom`` (default trivial) up to ``G``."""
    G = as_subgroup(G)
    if G.order > _bounds.BOUNDS.elements:
        raise EnumerationBoundExceeded(f"order {G.order} exceeds the element bound")
    N = bottom if bottom is not None else G.parent.trivial()
    terms = [N]
    while N.order < G.order:
        N = minimal_normal_over(G, N)
        terms.append(N)
    return ChiefSeries(terms)


def is_supersolvable(G: GroupLike, bottom: Subgroup | None = None) -> Outcome:
    """Every chief factor has prime order; with ``bottom`` this tests ``G/bottom``.

    The witness on failure is the offending pair of consecutive terms.
    """
    cs = chief_series(G, bottom)
    for a, b in zip(cs.terms, cs.terms[1:]):
        if not is_prime(b.order // a.order):
            return Outcome(False, (a, b))
    return Outcome(True, cs)


def has_supersolvable_sylow_tower(G: GroupLike) -> bool:
    """Normal series with successive Sylow factors for primes in decreasing order."""
    G = as_subgroup(G)
    N = G.parent.trivial()
    for p in sorted(prime_factors(G.order), reverse=True):
        S = sylow_subgroup(G, p)
        M = join(N, S)
        if M.order != N.order * S.order or not is_normal(G, M):
            return False
        N = M
    return True


def small_orders_central(G: GroupLike) -> Outcome:
    """Every element of order 2 or 4 lies in the center; witness is the first one that does not."""
    G = as_subgroup(G)
    U = G.universe
    o = U.orders[G.idx]
    small = G.idx[(o == 2) | (o == 4)]
    Z = center(G)
    bad = small[~Z.mask[small]]
    if bad.size:
        return Outcome(False, int(bad[0]))
    return Outcome(True)


def hall_2prime_complement(G: GroupLike) -> Subgroup:
    """A complement of odd order to the normal Sylow 2-subgroup.

    Built one odd prime at a time: the current Hall subgroup lies in a Hall
    subgroup for one more prime, which contains some Sylow subgroup for that
    prime, so a suitable conjugate is always found by scanning.
    """
    G = as_subgroup(G)
    P = sylow_subgroup(G, 2)
    if not is_normal(G, P):
        raise HypothesisViolation("the Sylow 2-subgroup is not normal")
    H = G.parent.trivial()
    for q in prime_factors(G.order):
        if q == 2:
            continue
        S = sylow_subgroup(G, q)
        target = H.order * S.order
        for g in right_transversal(G, normalizer(G, S)):
            K = join(H, conjugate_subgroup(S, g))
            if K.order == target:
                H = K
                break
        else:
            raise AssertionError("no Hall subgroup extension found")
    return H


def is_hall_complement(G: GroupLike, P: Subgroup, A: Subgroup) -> bool:
    G = as_subgroup(G)
    return A.order * P.order == G.order and intersection(P, A).order == 1


def sylow_2_is_normal(G: GroupLike) -> bool:
    G = as_subgroup(G)
    return is_normal(G, sylow_subgroup(G, 2))


def odd_part(n: int) -> int:
    return n // p_part(n, 2)
