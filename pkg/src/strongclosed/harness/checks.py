"""Verdicts: one hypothesis/conclusion evaluation of a theorem or lemma on one group."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from ..closure import (
    HypothesisSpec,
    Reading,
    is_strongly_closed,
    sylow_containing,
    theorem_hypothesis,
    valid_target_orders,
)
from ..errors import EnumerationBoundExceeded, InvalidParameter
from ..group import Group, GroupLike, Subgroup, as_subgroup, is_normal, normalizer
from ..numtheory import is_prime, prime_factors
from ..perm import Permutation
from ..structure import is_p_nilpotent, is_supersolvable
from ..subgroups import Shape, normal_subgroups, shape, sylow_subgroup
from .lemmas import LEMMAS

THEOREM_IDS = ("T1", "T2", "T3", "T4", "P31")


@dataclass
class Verdict:
    group_id: str
    check_id: str
    params: dict = field(default_factory=dict)
    hypothesis_holds: bool | None = None
    conclusion_holds: bool | None = None
    consistent: bool | None = None
    skipped: bool = False
    witnesses: list = field(default_factory=list)
    runtime_ms: float = 0.0
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, d: dict) -> "Verdict":
        return cls(**d)

    def sort_key(self) -> tuple:
        return (self.group_id, self.check_id, _params_key(self.params))


def _params_key(params: dict) -> tuple:
    # None sorts before numbers so the cyclic-branch verdict comes first
    return tuple((k, (v is not None, str(v) if not isinstance(v, int) else "", v if isinstance(v, int) else 0))
                 for k, v in sorted(params.items()))


def subgroup_json(H: Subgroup) -> dict:
    return {"order": H.order, "generators": [str(g) for g in H.generators]}


def subgroup_from_json(G: Group, d: dict) -> Subgroup:
    H = G.subgroup([Permutation.parse(s, G.degree) for s in d["generators"]])
    if H.order != d["order"]:
        raise InvalidParameter(f"witness subgroup has order {H.order}, recorded {d['order']}")
    return H


# Theorem checks -------------------------------------------------------------

def _conclusion_p_nilpotent(G: Subgroup, p: int) -> tuple[bool, list]:
    r = is_p_nilpotent(G, p)
    if r:
        return True, []
    return False, [{"kind": "p_prime_closure", "prime": p, "subgroup": subgroup_json(r.witness)}]


def _conclusion_supersolvable(G: Subgroup) -> tuple[bool, list]:
    r = is_supersolvable(G)
    if r:
        return True, []
    lower, upper = r.witness
    return False, [{"kind": "chief_factor", "lower": subgroup_json(lower), "upper": subgroup_json(upper)}]


def _hypothesis_witness(out) -> list:
    w = out.witness
    if isinstance(w, tuple):
        H, (a, g) = w
        return [{"kind": "not_strongly_closed", "subgroup": subgroup_json(H), "a": str(a), "g": str(g)}]
    if isinstance(w, dict) and "sylow" in w:
        return [{"kind": "no_target_order", "prime": w["prime"], "sylow": subgroup_json(w["sylow"])}]
    return []


def _theorem_prime(G: Subgroup, tid: str) -> int | None:
    if tid in ("T1", "P31"):
        return 2
    if tid == "T2":
        return prime_factors(G.order)[0] if G.order > 1 else None
    return None


def theorem_parameterizations(G: Subgroup, tid: str) -> list[int | None]:
    """Target orders a Sylow-based theorem is checked at; ``None`` marks the cyclic branch.

    The trivial group has none. When no order ``1 < |D| < |P|`` exists, a
    cyclic Sylow subgroup (order at most 2, or 1) still gives one verdict, except
    for P31, whose statement needs ``2 < |D| < |P|``.
    """
    if G.order == 1:
        return []
    p = _theorem_prime(G, tid)
    P = sylow_subgroup(G, p)
    orders = valid_target_orders(P, p, strict_two=tid == "P31")
    if orders:
        return orders
    if tid != "P31" and shape(P) is Shape.CYCLIC:
        return [None]
    return []


def t4_candidates(G: Subgroup, cap: int = 50) -> list[Subgroup]:
    """Normal subgroups ``E`` with ``G/E`` supersolvable, in canonical order, at most ``cap``."""
    out = []
    for E in normal_subgroups(G):
        if is_supersolvable(G, bottom=E):
            out.append(E)
            if len(out) >= cap:
                break
    return out


def check_theorem(G: GroupLike, spec: HypothesisSpec, group_id: str = "G") -> Verdict:
    """Evaluate one theorem instance. ``target_order=None`` means the cyclic branch."""
    t0 = time.perf_counter()
    G = as_subgroup(G)
    tid = spec.theorem_id
    params: dict = {"reading": spec.reading}
    if tid in ("T1", "T2", "P31"):
        params["target_order"] = spec.target_order
        params["clause"] = spec.include_order4_clause
    elif tid == "T3":
        params["clause"] = spec.include_order4_clause
    else:
        params["clause"] = spec.include_order4_clause
        params["E_order"] = spec.normal_subgroup_E.order
        params["E"] = [str(g) for g in spec.normal_subgroup_E.generators]
    v = Verdict(group_id, tid, params)
    try:
        if tid in ("T1", "T2", "P31") and spec.target_order is None:
            p = _theorem_prime(G, tid)
            if p is None or shape(sylow_subgroup(G, p)) is not Shape.CYCLIC:
                raise InvalidParameter("the cyclic branch needs a cyclic Sylow subgroup")
        hyp = theorem_hypothesis(G, spec)
        v.hypothesis_holds = bool(hyp)
        if not hyp:
            v.witnesses += _hypothesis_witness(hyp)
        if tid in ("T3", "T4"):
            ok, w = _conclusion_supersolvable(G)
        else:
            ok, w = _conclusion_p_nilpotent(G, _theorem_prime(G, tid))
        v.conclusion_holds = ok
        v.witnesses += w
        v.consistent = (not v.hypothesis_holds) or v.conclusion_holds
    except EnumerationBoundExceeded as exc:
        _mark_skipped(v, exc)
    v.runtime_ms = round((time.perf_counter() - t0) * 1000, 3)
    return v


def _mark_skipped(v: Verdict, exc: Exception) -> None:
    v.skipped = True
    v.hypothesis_holds = v.conclusion_holds = v.consistent = None
    v.witnesses = [{"kind": "skipped", "reason": str(exc)}]


# Lemma checks ---------------------------------------------------------------

def instance_json(inst: dict) -> dict:
    out = {}
    for k, v in inst.items():
        out[k] = subgroup_json(v) if isinstance(v, Subgroup) else v
    return out


def instance_from_json(G: Group, d: dict) -> dict:
    return {k: subgroup_from_json(G, v) if isinstance(v, dict) else v for k, v in d.items()}


def check_lemma(G: GroupLike, lemma_id: str, group_id: str = "G", reading: Reading = "normalizer",
                pair: tuple[Subgroup, Subgroup] | None = None, target_order: int | None = None) -> Verdict:
    """Evaluate every instance of a lemma on ``G``.

    ``hypothesis_holds``: some instance meets the hypothesis. ``conclusion_holds``:
    every such instance meets the conclusion (every instance at all, when none
    meets the hypothesis). The first violating instance is the witness. ``pair`` fixes ``(P, A)`` for the coprime-action lemmas;
    ``target_order`` restricts to instances with that order.
    """
    if lemma_id not in LEMMAS:
        raise InvalidParameter(f"unknown lemma id {lemma_id!r}")
    lem = LEMMAS[lemma_id]
    t0 = time.perf_counter()
    G = as_subgroup(G)
    v = Verdict(group_id, lemma_id, {"reading": reading} if lem.uses_reading else {})
    if target_order is not None:
        v.params["target_order"] = target_order
    ctx = {"pair": pair} if pair else {}
    try:
        total = hits = 0
        concl_hyp = concl_all = True
        for inst in lem.instances(G, reading, ctx):
            if target_order is not None and inst.get("target_order") != target_order:
                continue
            total += 1
            h, c = lem.evaluate(G, reading, **inst)
            concl_all = concl_all and c
            if h:
                hits += 1
                if not c and concl_hyp:
                    concl_hyp = False
                    v.witnesses.append({"kind": "instance", "instance": instance_json(inst)})
        v.detail = {"instances": total, "hypothesis_instances": hits}
        v.hypothesis_holds = hits > 0
        # with no hypothesis instance, report the plain conclusion over all instances
        v.conclusion_holds = concl_hyp if hits else concl_all
        v.consistent = (not v.hypothesis_holds) or v.conclusion_holds
    except EnumerationBoundExceeded as exc:
        _mark_skipped(v, exc)
    v.runtime_ms = round((time.perf_counter() - t0) * 1000, 3)
    return v


def check(G: GroupLike, what: HypothesisSpec | str, group_id: str = "G", reading: Reading = "normalizer") -> Verdict:
    """Theorem check for a ``HypothesisSpec``, lemma check for a lemma id."""
    if isinstance(what, HypothesisSpec):
        return check_theorem(G, what, group_id)
    return check_lemma(G, what, group_id, reading)


# Witness replay -------------------------------------------------------------

def _replay_one(G: Subgroup, w: dict, check_id: str, reading: Reading) -> bool:
    kind = w.get("kind")
    parent = G.parent
    if kind == "p_prime_closure":
        K = subgroup_from_json(parent, w["subgroup"])
        p = w["prime"]
        U = G.universe
        gens_coprime = all(U.orders[g] % p for g in K.gens)
        return K <= G and gens_coprime and K.order % p == 0
    if kind == "chief_factor":
        lo = subgroup_from_json(parent, w["lower"])
        hi = subgroup_from_json(parent, w["upper"])
        if not (lo < hi and is_normal(G, lo) and is_normal(G, hi)) or is_prime(hi.order // lo.order):
            return False
        between = [N for N in normal_subgroups(G) if lo < N < hi]
        return not between
    if kind == "not_strongly_closed":
        H = subgroup_from_json(parent, w["subgroup"])
        a = Permutation.parse(w["a"], parent.degree)
        g = Permutation.parse(w["g"], parent.degree)
        b = a ^ g
        if a not in H or b in H or b not in G:
            return False
        if reading == "normalizer":
            return b in normalizer(G, H)
        return not is_strongly_closed(H, sylow_containing(G, H), G)
    if kind == "no_target_order":
        P = subgroup_from_json(parent, w["sylow"])
        return shape(P) is not Shape.CYCLIC and P.order == sylow_subgroup(G, w["prime"]).order
    if kind == "instance":
        inst = instance_from_json(parent, w["instance"])
        h, c = LEMMAS[check_id].evaluate(G, reading, **inst)
        return h and not c
    return False


def verify_witness(G: GroupLike, verdict: Verdict | dict) -> bool:
    """Re-evaluate every recorded witness of a verdict against ``G``.

    True iff each witness reproduces the failure it documents.
    """
    v = verdict if isinstance(verdict, Verdict) else Verdict.from_json(verdict)
    G = as_subgroup(G)
    if v.skipped or not v.witnesses:
        return False
    reading = v.params.get("reading", "normalizer")
    return all(_replay_one(G, w, v.check_id, reading) for w in v.witnesses)
