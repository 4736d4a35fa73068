"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v -s``; the summary section
at the end lists every criterion with its outcome either way.
"""

from __future__ import annotations

import functools
import json
import random
import time

import pytest

import oracles
from conftest import ACCEPTANCE, as_set
from strongclosed import (
    HypothesisSpec,
    Permutation,
    center,
    centralizer,
    is_p_nilpotent,
    is_strongly_closed,
    is_strongly_closed_in_G,
    normal_closure,
    normalizer,
    strongly_closed,
)
from strongclosed.harness.campaign import CampaignConfig, run_campaign, strip_runtimes, write_report
from strongclosed.harness.catalog import builtin_catalog, lookup
from strongclosed.harness.checks import check_theorem, verify_witness
from strongclosed.harness.constructors import special_linear_2
from strongclosed.numtheory import prime_factors
from strongclosed.subgroups import Shape, is_maximal_subgroup, shape, subgroups_of_order, sylow_subgroup

pytestmark = pytest.mark.slow

JOBS = 4


def criterion(n: int, title: str):
    """Record the outcome of criterion ``n`` and print its line."""
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                note = fn(*args, **kwargs) or ""
            except BaseException as exc:
                ACCEPTANCE[n] = (title, False, f"{type(exc).__name__}: {str(exc).splitlines()[0][:160] if str(exc) else ''}")
                print(f"\ncriterion {n}: FAIL  {title}")
                raise
            note = f"{note}; {time.perf_counter() - t0:.1f}s".lstrip("; ")
            ACCEPTANCE[n] = (title, True, note)
            print(f"\ncriterion {n}: PASS  {title}  ({note})")
        return run
    return wrap


def _inconsistent(report: dict) -> list[dict]:
    return [v for v in report["verdicts"] if not v["skipped"] and not v["consistent"]]


def _errors(report: dict) -> list[dict]:
    return [v for v in report["verdicts"] if v["check_id"] == "ERROR"]


@criterion(1, "SL2(17) battery")
def test_sl2_17_battery():
    t0 = time.perf_counter()
    G = special_linear_2(17)
    W = G.whole
    assert G.order() == 4896
    P = sylow_subgroup(W, 2)
    assert P.order == 32
    assert shape(P) is Shape.GENERALIZED_QUATERNION
    assert is_maximal_subgroup(W, P) is True
    assert normalizer(W, P) == P
    Z = center(W)
    assert Z.order == 2
    assert subgroups_of_order(P, 2) == [Z]
    assert bool(is_strongly_closed_in_G(Z, W)) is True
    assert bool(is_strongly_closed(Z, P, W)) is True
    assert bool(strongly_closed(Z, W, "sylow")) is True
    assert bool(is_p_nilpotent(W, 2)) is False
    assert time.perf_counter() - t0 < 60
    return "within the 60s budget"


@criterion(2, "necessity of the order-4 clause on SL2(17)")
def test_necessity_experiment():
    W = special_linear_2(17).whole
    off = check_theorem(W, HypothesisSpec("T1", 2, include_order4_clause=False), "SL2_17")
    assert off.hypothesis_holds is True and off.conclusion_holds is False and off.consistent is False
    assert verify_witness(W, off)
    on = check_theorem(W, HypothesisSpec("T1", 2, include_order4_clause=True), "SL2_17")
    assert on.hypothesis_holds is False and on.consistent is True
    assert verify_witness(W, on)
    failing = on.witnesses[0]["subgroup"]["order"]
    return f"clause off: inconsistent; clause on: consistent, failing subgroup of order {failing}"


@criterion(3, "T1/T2/P31 campaign, order <= 400 plus SL2(17), PSL2(17)")
def test_theorem_1_2_campaign():
    cfg = CampaignConfig(max_order=400, checks=["T1", "T2", "P31"], reading="both")
    t0 = time.perf_counter()
    rep = run_campaign(config=cfg, jobs=JOBS)
    elapsed = time.perf_counter() - t0
    ids = {r["id"] for r in rep["catalog"]}
    assert {"SL2_17", "PSL2_17"} <= ids
    assert not _errors(rep)
    assert _inconsistent(rep) == []
    assert rep["summary"]["checked"] > 0
    assert elapsed < 600
    s = rep["summary"]
    return f"{len(ids)} groups, {s['checked']} verdicts, {s['inconsistent']} inconsistent, {s['skipped']} skipped"


@criterion(4, "T3/T4 campaign on the same corpus")
def test_theorem_3_4_campaign():
    cfg = CampaignConfig(max_order=400, checks=["T3", "T4"], reading="both", t4_cap=50)
    rep = run_campaign(config=cfg, jobs=JOBS)
    assert not _errors(rep)
    assert _inconsistent(rep) == []
    t4 = [v for v in rep["verdicts"] if v["check_id"] == "T4"]
    per_group: dict[tuple, int] = {}
    for v in t4:
        key = (v["group_id"], v["params"]["reading"])
        per_group[key] = per_group.get(key, 0) + 1
    assert max(per_group.values()) <= 50
    s = rep["summary"]
    return f"{s['checked']} verdicts ({len(t4)} for T4), {s['inconsistent']} inconsistent, {s['skipped']} skipped"


@criterion(5, "H-subgroup <=> strongly closed in G, every subgroup, order <= 200")
def test_definition_equivalence():
    cfg = CampaignConfig(max_order=200, checks=["EQ"], include_distinguished=False)
    rep = run_campaign(config=cfg, jobs=JOBS)
    assert not _errors(rep)
    assert all(not v["skipped"] for v in rep["verdicts"])
    bad = [v for v in rep["verdicts"] if v["conclusion_holds"] is not True]
    assert bad == []
    subgroups = sum(v["detail"]["instances"] for v in rep["verdicts"])
    return f"{len(rep['verdicts'])} groups, {subgroups} subgroups, 0 discrepancies"


LEMMAS_200 = ["L21", "L22", "L23", "L23c", "L24a", "L24b", "L24c", "L26"]
LEMMAS_500 = ["L25", "L28"]


@criterion(6, "lemma suite on the catalog and on coprime-action instances")
def test_lemma_suite():
    reps = [
        run_campaign(config=CampaignConfig(max_order=200, checks=LEMMAS_200, reading="both",
                                           include_distinguished=False), jobs=JOBS),
        run_campaign(config=CampaignConfig(max_order=500, checks=LEMMAS_500, reading="both",
                                           include_distinguished=False), jobs=JOBS),
    ]
    coprime_cfg = CampaignConfig(checks=["L29", "L210", "L211"], ids=["C1"], coprime=True, reading="both")
    coprime = run_campaign(config=coprime_cfg, jobs=JOBS)
    reps.append(coprime)
    for rep in reps:
        assert not _errors(rep)
        assert all(not v["skipped"] for v in rep["verdicts"])
        assert _inconsistent(rep) == []
    instances = {v["group_id"] for v in coprime["verdicts"] if v["group_id"].startswith("coprime:")}
    assert len(instances) >= 20
    assert {"coprime:C2^3|C7", "coprime:Q8|C3"} <= instances
    by_key = {(v["group_id"], v["check_id"]): v for v in coprime["verdicts"]}
    frob = by_key[("coprime:C2^3|C7", "L211")]
    assert frob["hypothesis_holds"] is False and frob["consistent"] is True
    checked = sum(r["summary"]["checked"] for r in reps)
    return f"{checked} verdicts, {len(instances)} coprime instances, 0 violations"


def _engine_vs_brute(gid: str, G) -> int:
    Gs = as_set(G)
    assert G.order() == len(oracles.closure([g.array_form for g in G.generators], G.degree))
    for x in Gs:
        assert G.contains(Permutation(x, zero_based=True))
    rng = random.Random(gid)
    pts = list(range(G.degree))
    outsiders = 0
    for _ in range(100):
        rng.shuffle(pts)
        cand = tuple(pts)
        assert G.contains(Permutation(cand, zero_based=True)) == (cand in Gs)
        outsiders += cand not in Gs
    W = G.whole
    subs = {}
    for x in G.elements():
        H = G.subgroup([x])
        subs.setdefault(H.key, H)
    for p in prime_factors(G.order()):
        P = sylow_subgroup(W, p)
        subs.setdefault(P.key, P)
    for H in subs.values():
        Hs = as_set(H)
        assert as_set(normalizer(W, H)) == oracles.normalizer(Gs, Hs)
        assert as_set(centralizer(W, H)) == oracles.centralizer(Gs, Hs)
        assert as_set(normal_closure(W, H)) == oracles.normal_closure(Gs, Hs, G.degree)
    return len(subs)


@criterion(7, "engine agrees with brute force on every catalog group of order <= 200")
def test_engine_oracle_equivalence():
    entries = [e for e in builtin_catalog() if e.order <= 200]
    total = 0
    for e in entries:
        total += _engine_vs_brute(e.id, e.group)
    return f"{len(entries)} groups, {total} subgroups compared"


@criterion(8, "campaign reports identical across --jobs values")
def test_determinism(tmp_path):
    cfg = CampaignConfig(max_order=100, checks=["T1", "T2", "T3", "T4", "P31", "L24c", "L25"],
                         weakened=True, reading="both", include_distinguished=False)
    a = run_campaign(config=cfg, jobs=1)
    b = run_campaign(config=cfg, jobs=JOBS)
    c = run_campaign(config=cfg, jobs=2)
    paths = []
    for name, rep in (("a", a), ("b", b), ("c", c)):
        path = tmp_path / f"{name}.json"
        write_report(strip_runtimes(rep), str(path))
        paths.append(path)
    blobs = [p.read_bytes() for p in paths]
    assert blobs[0] == blobs[1] == blobs[2]
    assert strip_runtimes(a) == strip_runtimes(b)
    # only runtime fields were removed
    assert json.loads(blobs[0])["summary"] == a["summary"]
    return f"{len(a['verdicts'])} verdicts byte-identical for jobs 1, 2, {JOBS}"


# Dropping the order-4 clause breaks more than SL2(17): every group whose Sylow
# 2-subgroup is quaternion-like with a central involution, yet not 2-nilpotent,
# satisfies the weakened hypothesis.
WEAKENED_FLAGGED = ["Q8:C3", "Q8:C9", "SL2_17", "SL2_3", "SL2_3xC2", "SL2_3xC3",
                    "SL2_5", "SL2_5xC3", "SL2_7"]


@pytest.fixture(scope="module")
def weakened_report():
    cfg = CampaignConfig(max_order=400, checks=["T1", "T2", "P31"], weakened=True, reading="both")
    return run_campaign(config=cfg, jobs=JOBS)


def test_weakened_campaign_flags_exactly_the_known_groups(weakened_report):
    assert not _errors(weakened_report)
    assert weakened_report["summary"]["inconsistent_groups"] == WEAKENED_FLAGGED
    for v in _inconsistent(weakened_report):
        assert v["params"]["clause"] is False
        assert verify_witness(lookup(v["group_id"]).group, v)


@pytest.mark.xfail(strict=True, reason="SL2(3), SL2(5), SL2(7) and relatives also violate the clause-free statement")
def test_weakened_campaign_flags_only_sl2_17(weakened_report):
    assert weakened_report["summary"]["inconsistent_groups"] == ["SL2_17"]


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v", "-s"]))
