"""Sylow subgroups, subgroup enumeration, Frattini subgroups and shape recognition."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import bounds as _bounds
from .errors import EnumerationBoundExceeded, InvalidParameter, NotAPGroup
from .group import (
    GroupLike,
    Subgroup,
    _require_le,
    as_subgroup,
    conjugate_subgroup,
    generate,
    join,
    normalizer,
    right_transversal,
)
from .numtheory import is_prime, p_part, prime_factors


def is_p_group(H: Subgroup, p: int | None = None) -> bool:
    n = H.order
    if n == 1:
        return True
    fs = prime_factors(n)
    return len(fs) == 1 and (p is None or fs[0] == p)


def p_elements(G: Subgroup, p: int) -> np.ndarray:
    """Indices of the nonidentity elements of ``G`` whose order is a power of ``p``."""
    o = G.universe.orders[G.idx]
    keep = o > 1
    rest = o.copy()
    while True:
        div = keep & (rest % p == 0)
        if not div.any():
            break
        rest[div] //= p
    return G.idx[keep & (rest == 1)]


def _coset_extend(H: Subgroup, x: int, p: int) -> Subgroup:
    """``<H, x>`` for ``x`` normalizing ``H`` with ``x^p`` in ``H``: union of ``H x^i``."""
    U = H.universe
    mask = H.mask.copy()
    y = x
    for _ in range(p - 1):
        mask[U.mul(H.idx, y)] = True
        y = int(U.mul(y, x))
    gens = list(H.gens) + [x]
    return Subgroup(H.parent, mask, gens)


def sylow_subgroup(G: GroupLike, p: int) -> Subgroup:
    """A Sylow ``p``-subgroup, grown from a ``p``-element of largest order.

    While ``Q`` is not yet Sylow, ``N_G(Q)/Q`` has order divisible by ``p``,
    so some ``p``-element of ``N_G(Q)`` outside ``Q`` exists; the smallest
    such element of largest order is added.
    """
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    G = as_subgroup(G)
    key = ("sylow", p)
    if key in G.cache:
        return G.cache[key]
    target = p_part(G.order, p)
    U = G.universe
    Q = G.parent.trivial()
    if target > 1:
        pe = p_elements(G, p)
        o = U.orders[pe]
        start = int(pe[np.lexsort((pe, -o))][0])
        Q = generate(G.parent, [start])
        while Q.order < target:
            N = normalizer(G, Q)
            cand = p_elements(N, p)
            cand = cand[~Q.mask[cand]]
            o = U.orders[cand]
            x = int(cand[np.lexsort((cand, -o))][0])
            Q = join(Q, [x])
        assert Q.order == target
    G.cache[key] = Q
    return Q


def _pgroup_layers(P: Subgroup, p: int, top: int) -> dict[int, list[Subgroup]]:
    """All subgroups of the p-group ``P`` of orders ``p, p^2, ..., top``."""
    U = P.universe
    layers: dict[int, list[Subgroup]] = {}
    seen: dict[bytes, Subgroup] = {}
    layer = []
    for x in p_elements(P, p):
        if U.orders[x] != p:
            continue
        C = generate(P.parent, [int(x)])
        if C.key not in seen:
            seen[C.key] = C
            layer.append(C)
    n = p
    while layer and n <= top:
        layer.sort(key=Subgroup.sort_key)
        layers[n] = layer
        if n == top:
            break
        nxt = []
        for H in layer:
            N = normalizer(P, H)
            covered = H.mask.copy()
            for x in N.idx:
                if covered[x]:
                    continue
                if not H.mask[U.power(int(x), p)]:
                    continue
                K = _coset_extend(H, int(x), p)
                covered |= K.mask
                if K.key not in seen:
                    seen[K.key] = K
                    nxt.append(K)
        layer = nxt
        n *= p
    return layers


def subgroups_of_order(G: GroupLike, n: int) -> list[Subgroup]:
    """Every subgroup of ``G`` of order ``n``, sorted by canonical key."""
    G = as_subgroup(G)
    if n < 1 or G.order % n:
        return []
    if n == 1:
        return [G.parent.trivial()]
    if n == G.order:
        return [G]
    fs = prime_factors(n)
    if len(fs) == 1:
        p = fs[0]
        if is_p_group(G, p):
            if G.order > _bounds.BOUNDS.pgroup_subgroups:
                raise EnumerationBoundExceeded(f"p-group of order {G.order} exceeds the bound")
            key = ("layers", p)
            layers = G.cache.get(key)
            if layers is None or max(layers, default=1) < n:
                layers = _pgroup_layers(G, p, n)
                G.cache[key] = layers
            return list(layers.get(n, []))
        # every p-subgroup lies in a Sylow subgroup; collect conjugates
        P = sylow_subgroup(G, p)
        inside = subgroups_of_order(P, n)
        NP = normalizer(G, P)
        found: dict[bytes, Subgroup] = {}
        for g in right_transversal(G, NP):
            for S in inside:
                C = conjugate_subgroup(S, g)
                found.setdefault(C.key, C)
        return sorted(found.values(), key=Subgroup.sort_key)
    return sorted((H for cls in all_subgroups(G) for H in cls.conjugates if H.order == n), key=Subgroup.sort_key)


@dataclass
class SubgroupClass:
    representative: Subgroup
    conjugates: list[Subgroup] = field(default_factory=list)

    @property
    def class_size(self) -> int:
        return len(self.conjugates)

    @property
    def order(self) -> int:
        return self.representative.order


def conjugacy_class_of_subgroup(G: GroupLike, H: Subgroup) -> list[Subgroup]:
    """All ``G``-conjugates of ``H``, sorted by canonical key."""
    G = as_subgroup(G)
    _require_le(H, G)
    seen = {H.key: H}
    queue = [H]
    for K in queue:
        for g in G.gens:
            C = conjugate_subgroup(K, g)
            if C.key not in seen:
                seen[C.key] = C
                queue.append(C)
    return sorted(seen.values(), key=Subgroup.sort_key)


def _zuppos(G: Subgroup) -> list[Subgroup]:
    """Cyclic subgroups of prime-power order, one per subgroup."""
    seen: dict[bytes, Subgroup] = {}
    for p in prime_factors(G.order):
        for x in p_elements(G, p):
            C = generate(G.parent, [int(x)])
            seen.setdefault(C.key, C)
    return sorted(seen.values(), key=Subgroup.sort_key)


def all_subgroups(G: GroupLike) -> list[SubgroupClass]:
    """All subgroups of ``G`` grouped into conjugacy classes.

    Classes are grown by joining class representatives with cyclic subgroups
    of prime-power order; every subgroup ``K`` is ``<M, Z>`` for a maximal
    subgroup ``M`` of ``K`` and such a cyclic ``Z``, so the search is complete.
    """
    G = as_subgroup(G)
    if "all_subgroups" in G.cache:
        return G.cache["all_subgroups"]
    if G.order > _bounds.BOUNDS.lattice:
        raise EnumerationBoundExceeded(f"order {G.order} exceeds the lattice bound {_bounds.BOUNDS.lattice}")
    zuppos = _zuppos(G)
    trivial = G.parent.trivial()
    known: dict[bytes, Subgroup] = {trivial.key: trivial}
    classes = [SubgroupClass(trivial, [trivial])]
    queue = [trivial]
    while queue:
        nxt = []
        for H in queue:
            for Z in zuppos:
                if Z <= H:
                    continue
                K = join(H, Z)
                if K.key in known:
                    continue
                conj = conjugacy_class_of_subgroup(G, K)
                for C in conj:
                    known[C.key] = C
                classes.append(SubgroupClass(conj[0], conj))
                nxt.append(conj[0])
        queue = nxt
    classes.sort(key=lambda c: c.representative.sort_key())
    G.cache["all_subgroups"] = classes
    return classes


def normal_subgroups(G: GroupLike) -> list[Subgroup]:
    """Every normal subgroup, as joins of normal closures of single elements."""
    from .group import conjugacy_class_reps, normal_closure

    G = as_subgroup(G)
    if "normal_subgroups" in G.cache:
        return G.cache["normal_subgroups"]
    if G.order > _bounds.BOUNDS.elements:
        raise EnumerationBoundExceeded(f"order {G.order} exceeds the element bound")
    gens: dict[bytes, Subgroup] = {}
    for x in conjugacy_class_reps(G):
        if x == 0:
            continue
        C = normal_closure(G, generate(G.parent, [x]))
        gens.setdefault(C.key, C)
    basic = sorted(gens.values(), key=Subgroup.sort_key)
    trivial = G.parent.trivial()
    known = {trivial.key: trivial}
    queue = [trivial]
    for N in queue:
        for M in basic:
            if M <= N:
                continue
            K = join(N, M)
            if K.key not in known:
                known[K.key] = K
                queue.append(K)
    out = sorted(known.values(), key=Subgroup.sort_key)
    G.cache["normal_subgroups"] = out
    return out


def _require_p_group(P: Subgroup) -> int:
    if P.order == 1:
        raise NotAPGroup("the trivial group has no maximal subgroups of prime index")
    fs = prime_factors(P.order)
    if len(fs) != 1:
        raise NotAPGroup(f"order {P.order} is not a prime power")
    return fs[0]


def maximal_subgroups(P: Subgroup) -> list[Subgroup]:
    """Maximal subgroups of a p-group: exactly its subgroups of index p."""
    p = _require_p_group(P)
    return subgroups_of_order(P, P.order // p)


def frattini_subgroup(P: Subgroup) -> Subgroup:
    """Intersection of all maximal subgroups of the p-group ``P``."""
    maxes = maximal_subgroups(P)
    mask = P.mask.copy()
    for M in maxes:
        mask &= M.mask
    return Subgroup(P.parent, mask)


def is_maximal_subgroup(G: GroupLike, H: Subgroup) -> bool:
    """True iff ``H < G`` and no subgroup lies strictly between them.

    ``<H, g>`` only depends on the double coset ``HgH``, so one element per
    double coset is tried.
    """
    G = as_subgroup(G)
    _require_le(H, G)
    if H.order == G.order:
        return False
    U = G.universe
    covered = H.mask.copy()
    for g in G.idx:
        if covered[g]:
            continue
        K = join(H, [int(g)])
        if K.order != G.order:
            return False
        dc = U.mul(U.mul(H.idx[:, None], int(g)), H.idx[None, :]).ravel()
        covered[dc] = True
    return True


class Shape(str, Enum):
    CYCLIC = "cyclic"
    ELEMENTARY_ABELIAN = "elementary_abelian"
    ABELIAN = "abelian"
    DIHEDRAL = "dihedral"
    GENERALIZED_QUATERNION = "generalized_quaternion"
    OTHER = "other"


def is_abelian(H: Subgroup) -> bool:
    U = H.universe
    g = np.array(H.gens, dtype=np.int64)
    if g.size < 2:
        return True
    return bool(np.all(U.mul(g[:, None], g[None, :]) == U.mul(g[None, :], g[:, None])))


def _cyclic_index2_with(H: Subgroup, test) -> bool:
    """Is there ``r`` of order |H|/2 and ``s`` outside <r> with ``test(r, s, <r>)``?"""
    U = H.universe
    m = H.order // 2
    orders = U.orders[H.idx]
    tried: set[bytes] = set()
    for r in H.idx[orders == m]:
        R = generate(H.parent, [int(r)])
        if R.key in tried:
            continue
        tried.add(R.key)
        outside = H.idx[~R.mask[H.idx]]
        if test(int(r), outside, R):
            return True
    return False


def shape(H: Subgroup) -> Shape:
    """Recognise cyclic, elementary abelian, abelian, dihedral and generalized quaternion groups.

    Element-order statistics decide the candidate; the defining relations are
    then verified. Anything else, or anything ambiguous, is ``OTHER``.
    """
    n = H.order
    if n > _bounds.BOUNDS.elements:
        raise EnumerationBoundExceeded(f"order {n} exceeds the element bound")
    U = H.universe
    orders = U.orders[H.idx]
    if orders.max() == n:
        return Shape.CYCLIC
    abelian = is_abelian(H)
    if abelian:
        fs = prime_factors(n)
        if len(fs) == 1 and np.all(orders[orders > 1] == fs[0]):
            return Shape.ELEMENTARY_ABELIAN
        return Shape.ABELIAN
    if n % 2:
        return Shape.OTHER
    m = n // 2

    def dihedral_rel(r, outside, R):
        s = int(outside[0])
        return U.orders[s] == 2 and int(U.conj(r, s)) == int(U.inv[r])

    def quaternion_rel(r, outside, R):
        s = int(outside[0])
        return int(U.mul(s, s)) == U.power(r, m // 2) and int(U.conj(r, s)) == int(U.inv[r])

    # the relations on <r, s> pin the group down up to isomorphism
    if m >= 3 and _cyclic_index2_with(H, dihedral_rel):
        return Shape.DIHEDRAL
    if n >= 8 and n & (n - 1) == 0 and int(np.sum(orders == 2)) == 1 and _cyclic_index2_with(H, quaternion_rel):
        return Shape.GENERALIZED_QUATERNION
    return Shape.OTHER
