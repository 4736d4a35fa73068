"""Lemma checks as (instances, evaluator) pairs.

An instance names the subgroups a lemma quantifies over (plus an optional
target order); the evaluator returns ``(hypothesis, conclusion)`` for one
instance. Verdicts aggregate over instances, and witness replay re-runs the
evaluator on the recorded instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from ..closure import Reading, is_h_subgroup, is_strongly_closed_in_G, strongly_closed
from ..group import (
    Subgroup,
    center,
    centralizer,
    intersection,
    is_normal,
    is_subnormal,
    normal_closure,
    normalizer,
    quotient_group,
)
from ..numtheory import is_prime, p_part
from ..structure import (
    fitting_data,
    hall_2prime_complement,
    is_p_nilpotent,
    is_simple,
    small_orders_central,
)
from ..subgroups import (
    Shape,
    all_subgroups,
    is_abelian,
    is_maximal_subgroup,
    is_p_group,
    maximal_subgroups,
    normal_subgroups,
    shape,
    subgroups_of_order,
    sylow_subgroup,
)

Instance = dict  # role name -> Subgroup, optionally "target_order" -> int


@dataclass(frozen=True)
class Lemma:
    id: str
    summary: str
    instances: Callable[[Subgroup, Reading, dict], Iterable[Instance]]
    evaluate: Callable[..., tuple[bool, bool]]
    uses_reading: bool = False


def _every_subgroup(G: Subgroup) -> list[Subgroup]:
    return sorted((H for cls in all_subgroups(G) for H in cls.conjugates), key=Subgroup.sort_key)


def _closed_p_subgroups(G: Subgroup, reading: Reading) -> Iterator[Subgroup]:
    for H in _every_subgroup(G):
        if H.order > 1 and is_p_group(H) and strongly_closed(H, G, reading):
            yield H


def _closed_p_subgroup(G: Subgroup, H: Subgroup, reading: Reading) -> bool:
    return H.order > 1 and is_p_group(H) and bool(strongly_closed(H, G, reading))


# L21: normal Sylow 2-subgroup has an odd-order complement.

def _l21_instances(G, reading, ctx):
    yield {"P": sylow_subgroup(G, 2)}


def _l21_eval(G, reading, P):
    if not is_normal(G, P):
        return False, True
    A = hall_2prime_complement(G)
    ok = A.order % 2 == 1 and A.order * P.order == G.order and intersection(P, A).order == 1
    return True, ok


# L22: cyclic Sylow 2-subgroup forces 2-nilpotence.

def _l22_eval(G, reading, P):
    return shape(P) is Shape.CYCLIC or P.order == 1, bool(is_p_nilpotent(G, 2))


# L23: 2-nilpotent iff every maximal subgroup of P is strongly closed.

def _maxes_closed(G, P, reading) -> bool:
    return all(strongly_closed(M, G, reading, P) for M in maximal_subgroups(P))


def _l23_instances(G, reading, ctx):
    P = sylow_subgroup(G, 2)
    if P.order > 1:
        yield {"P": P}


def _l23_eval(G, reading, P):
    return bool(is_p_nilpotent(G, 2)), _maxes_closed(G, P, reading)


def _l23c_eval(G, reading, P):
    return _maxes_closed(G, P, reading), bool(is_p_nilpotent(G, 2))


# L24a-L24c: inheritance of strong closure for p-subgroups.

def _l24a_instances(G, reading, ctx):
    subs = _every_subgroup(G)
    for H in _closed_p_subgroups(G, reading):
        for L in subs:
            if H <= L and L.order < G.order:
                yield {"H": H, "L": L}


def _l24a_eval(G, reading, H, L):
    return _closed_p_subgroup(G, H, reading), bool(strongly_closed(H, L, reading))


_QUOTIENTS: dict = {}


def _quotient(G: Subgroup, N: Subgroup):
    key = (id(G.parent), G.key, N.key)
    if key not in _QUOTIENTS:
        if len(_QUOTIENTS) > 64:
            _QUOTIENTS.clear()
        _QUOTIENTS[key] = quotient_group(G, N)
    return _QUOTIENTS[key]


def _l24b_instances(G, reading, ctx):
    normals = [N for N in normal_subgroups(G) if 1 < N.order < G.order]
    for H in _closed_p_subgroups(G, reading):
        for N in normals:
            yield {"H": H, "N": N}


def _l24b_eval(G, reading, H, N):
    if not (_closed_p_subgroup(G, H, reading) and is_normal(G, N)):
        return False, True
    Q, proj = _quotient(G, N)
    Hbar = proj.image(H)
    closed = bool(strongly_closed(Hbar, Q.whole, reading))
    same_normalizer = normalizer(Q.whole, Hbar) == proj.image(normalizer(G, H))
    return True, closed and same_normalizer


def _l24c_instances(G, reading, ctx):
    for H in _closed_p_subgroups(G, reading):
        yield {"H": H}


def _l24c_eval(G, reading, H):
    return _closed_p_subgroup(G, H, reading) and is_subnormal(G, H), is_normal(G, H)


# L25: strongly closed 2-subgroup with N/C a 2-group is Sylow in its normal closure.

def _l25_instances(G, reading, ctx):
    for H in _closed_p_subgroups(G, reading):
        if H.order % 2 == 0:
            yield {"H": H}


def _l25_eval(G, reading, H):
    if not (H.order % 2 == 0 and _closed_p_subgroup(G, H, reading)):
        return False, True
    quotient = normalizer(G, H).order // centralizer(G, H).order
    if p_part(quotient, 2) != quotient:
        return False, True
    return True, H.order == p_part(normal_closure(G, H).order, 2)


# L26: elements of order 2 and 4 central implies 2-nilpotent.

def _whole(G, reading, ctx):
    yield {}


def _l26_eval(G, reading):
    return bool(small_orders_central(G)), bool(is_p_nilpotent(G, 2))


# L27 spot check: a simple group with maximal Sylow 2-subgroup has the
# order of L_2(q) for a prime q = 2^m +- 1 >= 17.

def _psl2_order_match(n: int) -> bool:
    q = 17
    while q * (q * q - 1) // 2 <= n:
        near_power = (q - 1) & (q - 2) == 0 or (q + 1) & q == 0
        if near_power and is_prime(q) and q * (q * q - 1) // 2 == n:
            return True
        q += 2
    return False


def _l27_eval(G, reading):
    if G.order == 1 or is_abelian(G) or not is_simple(G):
        return False, True
    P = sylow_subgroup(G, 2)
    if not is_maximal_subgroup(G, P):
        return False, True
    return True, _psl2_order_match(G.order)


# L28: C_G(F*(G)) <= F*(G).

def _l28_eval(G, reading):
    Fstar = fitting_data(G).generalized_fitting
    return True, centralizer(G, Fstar) <= Fstar


# Lemmas 2.9-2.11: an odd-order group A acting on a 2-group P, both inside G.

def _centralizes(A: Subgroup, xs) -> bool:
    U = A.universe
    for a in A.gens:
        if (U.mul(a, xs) != U.mul(xs, a)).any():
            return False
    return True


def coprime_pair(G: Subgroup) -> tuple[Subgroup, Subgroup] | None:
    """``(P, A)`` with ``P`` the normal Sylow 2-subgroup and ``A`` an odd complement, if any."""
    if G.order % 2 or G.order == p_part(G.order, 2):
        return None
    P = sylow_subgroup(G, 2)
    if not is_normal(G, P):
        return None
    return P, hall_2prime_complement(G)


def _coprime_instances(G, reading, ctx):
    pair = ctx.get("pair") or coprime_pair(G)
    if pair is not None:
        yield {"P": pair[0], "A": pair[1]}


def _l29_eval(G, reading, P, A):
    o = P.universe.orders[P.idx]
    small = P.idx[(o == 2) | (o == 4)]
    return _centralizes(A, small), _centralizes(A, P.idx)


def valid_orders(P: Subgroup) -> list[int]:
    out, d = [], 2
    while d < P.order:
        out.append(d)
        d *= 2
    return out


def _invariant(A: Subgroup, H: Subgroup) -> bool:
    U = A.universe
    return all(H.mask[U.conj(H.idx, a)].all() for a in A.gens)


def _l211_instances(G, reading, ctx):
    for inst in _coprime_instances(G, reading, ctx):
        for d in valid_orders(inst["P"]):
            yield {**inst, "target_order": d}


def _l211_eval(G, reading, P, A, target_order):
    orders = [target_order] + ([4] if target_order == 2 and P.order > 4 else [])
    hyp = all(_invariant(A, H) for n in orders for H in subgroups_of_order(P, n))
    return hyp, _centralizes(A, P.idx)


def _elementary_abelian_2(P: Subgroup) -> bool:
    return P.order > 1 and is_p_group(P, 2) and is_abelian(P) and bool((P.universe.orders[P.idx] <= 2).all())


def _l210_instances(G, reading, ctx):
    P = ctx["pair"][0] if ctx.get("pair") else sylow_subgroup(G, 2)
    if _elementary_abelian_2(P):
        for d in valid_orders(P):
            yield {"P": P, "target_order": d}


def _l210_eval(G, reading, P, target_order):
    if not _elementary_abelian_2(P):
        return False, True
    hyp = all(is_normal(G, H) for H in subgroups_of_order(P, target_order))
    Z = center(G)
    return hyp, bool(Z.mask[P.idx].all())


# Definition equivalence: H-subgroup iff strongly closed in its normalizer.

def _eq_instances(G, reading, ctx):
    for H in _every_subgroup(G):
        yield {"H": H}


def _eq_eval(G, reading, H):
    return True, bool(is_h_subgroup(H, G)) == bool(is_strongly_closed_in_G(H, G))


def _sylow2(G, reading, ctx):
    yield {"P": sylow_subgroup(G, 2)}


LEMMAS: dict[str, Lemma] = {
    lem.id: lem
    for lem in [
        Lemma("L21", "normal Sylow 2-subgroup has an odd complement", _l21_instances, _l21_eval),
        Lemma("L22", "cyclic Sylow 2-subgroup implies 2-nilpotent", _sylow2, _l22_eval),
        Lemma("L23", "2-nilpotent implies maximal subgroups of P strongly closed", _l23_instances, _l23_eval, True),
        Lemma("L23c", "maximal subgroups of P strongly closed implies 2-nilpotent", _l23_instances, _l23c_eval, True),
        Lemma("L24a", "strong closure passes to intermediate subgroups", _l24a_instances, _l24a_eval, True),
        Lemma("L24b", "strong closure passes to quotients, normalizers map onto", _l24b_instances, _l24b_eval, True),
        Lemma("L24c", "strongly closed and subnormal implies normal", _l24c_instances, _l24c_eval, True),
        Lemma("L25", "closed 2-subgroup with 2-group N/C is Sylow in its normal closure", _l25_instances, _l25_eval, True),
        Lemma("L26", "central elements of order 2 and 4 imply 2-nilpotent", _whole, _l26_eval),
        Lemma("L27", "simple with maximal Sylow 2-subgroup has L_2(q) order", _whole, _l27_eval),
        Lemma("L28", "C_G(F*(G)) <= F*(G)", _whole, _l28_eval),
        Lemma("L29", "A centralizing elements of order 2 and 4 acts trivially", _coprime_instances, _l29_eval),
        Lemma("L210", "order-|D| subgroups normal implies minimal subgroups central", _l210_instances, _l210_eval),
        Lemma("L211", "order-|D| subgroups A-invariant implies trivial action", _l211_instances, _l211_eval),
        Lemma("EQ", "H-subgroup iff strongly closed in its normalizer", _eq_instances, _eq_eval),
    ]
}
LEMMA_IDS = tuple(LEMMAS)
