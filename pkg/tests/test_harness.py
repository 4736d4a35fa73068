from __future__ import annotations

import json
import math

import pytest

from conftest import group, ids_up_to
from strongclosed import HypothesisSpec, InvalidParameter
from strongclosed.bounds import bounds
from strongclosed.group import center, is_normal
from strongclosed.harness.campaign import (
    CampaignConfig,
    parse_checks,
    read_report,
    run_campaign,
    run_entry,
    strip_runtimes,
    unexpected_inconsistencies,
    write_report,
)
from strongclosed.harness.catalog import DISTINGUISHED, CatalogEntry, builtin_catalog, lookup, select
from strongclosed.harness.checks import (
    Verdict,
    check,
    check_lemma,
    check_theorem,
    t4_candidates,
    theorem_parameterizations,
    verify_witness,
)
from strongclosed.harness.constructors import (
    construct,
    cyclic,
    dihedral,
    expected_order,
    generalized_quaternion,
    projective_special_linear_2,
    semidirect_product,
    special_linear_2,
    symmetric,
)
from strongclosed.harness.coprime import (
    COPRIME_IDS,
    CoprimeActionInstance,
    coprime_instance,
    coprime_instances,
    lemma_2_9_check,
    lemma_2_10_check,
    lemma_2_11_check,
)
from strongclosed.harness.lemmas import LEMMA_IDS, LEMMAS
from strongclosed.structure import is_simple
from strongclosed.subgroups import Shape, is_maximal_subgroup, shape, subgroups_of_order, sylow_subgroup


def W(gid):
    return group(gid).whole


class TestConstructors:
    def test_quaternion_32(self):
        Q = generalized_quaternion(32)
        assert Q.order() == 32
        assert len(subgroups_of_order(Q.whole, 2)) == 1
        assert shape(Q.whole) is Shape.GENERALIZED_QUATERNION

    def test_sl2_17_degree(self):
        G = special_linear_2(17)
        assert G.degree == 288 and G.order() == 4896

    def test_cyclic_one(self):
        assert cyclic(1).order() == 1

    @pytest.mark.parametrize("n", range(1, 13))
    def test_family_orders(self, n):
        assert cyclic(n).order() == n
        assert dihedral(2 * n).order() == 2 * n
        if n <= 6:
            assert symmetric(n).order() == math.factorial(n)

    @pytest.mark.parametrize("q", [2, 3, 5, 7, 11, 13])
    def test_linear_orders(self, q):
        assert special_linear_2(q).order() == q * (q * q - 1) == expected_order("special_linear_2", q)
        assert projective_special_linear_2(q).order() == q * (q * q - 1) // math.gcd(2, q - 1)

    @pytest.mark.parametrize("k", [3, 4, 5, 6])
    def test_quaternion_orders(self, k):
        assert generalized_quaternion(2 ** k).order() == 2 ** k

    @pytest.mark.parametrize("expr", ["special_linear_2(4)", "special_linear_2(37)", "generalized_quaternion(12)",
                                      "dihedral(5)", "cyclic(0)", "unknown(3)", "cyclic(", "cyclic(n=3)"])
    def test_out_of_range_rejected(self, expr):
        with pytest.raises(InvalidParameter):
            construct(expr)

    def test_invalid_action_rejected(self):
        # x1 -> x1^2 is not an automorphism of C4
        with pytest.raises(InvalidParameter):
            semidirect_product(cyclic(4), cyclic(3), [["x1^2"]])
        # inversion has order 2, so it cannot come from a generator of order 3
        with pytest.raises(InvalidParameter):
            semidirect_product(cyclic(5), cyclic(3), [["x1^-1"]])

    def test_semidirect_normal_factor(self):
        G = construct("semidirect_product(cyclic(7), cyclic(3), [['x1^2']])")
        assert G.order() == 21
        P = sylow_subgroup(G.whole, 7)
        assert is_normal(G.whole, P)
        assert center(G.whole).order == 1


class TestCatalog:
    def test_ids_unique_and_sorted(self):
        cat = builtin_catalog()
        assert len({e.id for e in cat}) == len(cat)
        assert [(e.order, e.id) for e in cat] == sorted((e.order, e.id) for e in cat)

    @pytest.mark.parametrize("gid", [e.id for e in builtin_catalog()])
    def test_declared_order_matches(self, gid):
        assert group(gid).order() == lookup(gid).order

    def test_selection(self):
        small = select(max_order=12)
        assert all(e.order <= 12 or e.id in DISTINGUISHED for e in small)
        assert {"SL2_17", "PSL2_17"} <= {e.id for e in small}
        assert all(e.order <= 12 for e in select(max_order=12, include_distinguished=False))
        assert [e.id for e in select(ids=["S4", "Q8"])] == ["S4", "Q8"]
        with pytest.raises(InvalidParameter):
            select(ids=["nope"])

    def test_mismatched_order_detected(self):
        with pytest.raises(InvalidParameter):
            CatalogEntry("bad", "cyclic(5)", 6).group

    def test_baumann_spot_check(self):
        G = W("PSL2_17")
        assert is_simple(G)
        assert is_maximal_subgroup(G, sylow_subgroup(G, 2))
        assert 17 == 2 ** 4 + 1
        v = check_lemma(G, "L27", "PSL2_17")
        assert v.hypothesis_holds and v.conclusion_holds


class TestCoprime:
    def test_at_least_twenty(self):
        assert len(COPRIME_IDS) >= 20
        assert "C2^3|C7" in COPRIME_IDS and "Q8|C3" in COPRIME_IDS

    @pytest.mark.parametrize("iid", COPRIME_IDS)
    def test_instance_invariants(self, iid):
        inst = coprime_instance(iid)
        G = inst.semidirect.whole
        assert inst.A.order() % 2 == 1
        assert is_normal(G, inst.normal)
        assert inst.normal.order == inst.P.order()
        assert G.order == inst.P.order() * inst.A.order() // inst.kernel_order
        assert inst.complement.order * inst.kernel_order == inst.A.order()

    def test_trivial_action(self):
        inst = coprime_instance("V4|C3-trivial")
        assert inst.acts_trivially
        for v in (lemma_2_9_check(inst), lemma_2_11_check(inst)):
            assert v.hypothesis_holds and v.conclusion_holds and v.consistent

    def test_frobenius_56(self):
        inst = coprime_instance("C2^3|C7")
        assert inst.semidirect.order() == 56
        v = lemma_2_11_check(inst)
        assert v.hypothesis_holds is False and v.consistent
        # C7 permutes the seven involutions in a single orbit
        A = inst.complement
        U = A.universe
        invols = [int(x) for x in inst.normal.idx if U.orders[x] == 2]
        a = A.gens[0]
        orbit, x = set(), invols[0]
        for _ in range(7):
            orbit.add(x)
            x = int(U.conj(x, a))
        assert orbit == set(invols)

    def test_q8_c3_order4(self):
        inst = coprime_instance("Q8|C3")
        assert inst.semidirect.order() == 24
        v = lemma_2_11_check(inst, target_order=4)
        assert v.params["target_order"] == 4
        assert v.hypothesis_holds is False and v.consistent

    def test_l210_on_elementary_abelian(self):
        v = lemma_2_10_check(coprime_instance("C2^4|C3"))
        assert v.consistent and v.detail["instances"] == 3

    def test_rejects_bad_inputs(self):
        with pytest.raises(InvalidParameter):
            CoprimeActionInstance("x", cyclic(3), cyclic(3), [["x1"]])
        with pytest.raises(InvalidParameter):
            CoprimeActionInstance("x", cyclic(4), cyclic(2), [["x1"]])
        with pytest.raises(KeyError):
            coprime_instance("missing")

    def test_all_consistent(self):
        for inst in coprime_instances():
            for fn in (lemma_2_9_check, lemma_2_10_check, lemma_2_11_check):
                assert fn(inst).consistent is True


class TestVerdicts:
    def test_necessity_witness(self, SL2_17):
        G = SL2_17.whole
        v = check(G, HypothesisSpec("T1", 2, False), "SL2_17")
        assert v.hypothesis_holds and not v.conclusion_holds and v.consistent is False
        assert verify_witness(G, v)
        on = check(G, HypothesisSpec("T1", 2, True), "SL2_17")
        assert not on.hypothesis_holds and on.consistent
        assert verify_witness(G, on)

    def test_cyclic_branch_c12(self):
        v = check_theorem(W("C12"), HypothesisSpec("T1", 2), "C12")
        assert v.hypothesis_holds and v.conclusion_holds and v.consistent
        v = check_theorem(W("C6"), HypothesisSpec("T1", None), "C6")
        assert v.hypothesis_holds and v.params["target_order"] is None

    def test_cyclic_branch_rejected_for_noncyclic(self):
        with pytest.raises(InvalidParameter):
            check_theorem(W("S4"), HypothesisSpec("T1", None))

    def test_consistency_formula(self):
        for gid in ("S4", "A4", "SL2_3", "D8xC3", "A5"):
            for tid in ("T1", "T2", "P31"):
                for d in theorem_parameterizations(W(gid), tid):
                    v = check_theorem(W(gid), HypothesisSpec(tid, d), gid)
                    assert v.consistent == ((not v.hypothesis_holds) or v.conclusion_holds)
                    if not v.hypothesis_holds or not v.conclusion_holds:
                        assert v.witnesses and verify_witness(W(gid), v)

    def test_parameterizations(self):
        assert theorem_parameterizations(W("C1"), "T1") == []
        assert theorem_parameterizations(W("C6"), "T1") == [None]
        assert theorem_parameterizations(W("C6"), "P31") == []
        assert theorem_parameterizations(W("S4"), "T1") == [2, 4]
        assert theorem_parameterizations(W("S4"), "P31") == [4]
        assert theorem_parameterizations(W("C7:C3"), "T2") == [None]

    def test_t4_candidates(self):
        Es = t4_candidates(W("S4"))
        assert [E.order for E in Es] == [4, 12, 24]
        assert len(t4_candidates(W("C2^4"), cap=5)) == 5

    def test_json_round_trip(self):
        v = check_theorem(W("A4"), HypothesisSpec("T3"), "A4")
        again = Verdict.from_json(json.loads(json.dumps(v.to_json())))
        assert again == v
        assert verify_witness(W("A4"), again.to_json())

    def test_skipped_not_passed(self):
        G = construct("symmetric(5)")
        with bounds(lattice=50):
            v = check_lemma(G.whole, "EQ", "S5")
        assert v.skipped and v.consistent is None
        assert v.witnesses[0]["kind"] == "skipped"
        assert not verify_witness(G.whole, v)

    def test_lemma_verdict_detail(self):
        v = check_lemma(W("S4"), "L24c", "S4")
        assert v.params == {"reading": "normalizer"}
        assert v.detail["instances"] > 0
        assert check_lemma(W("S4"), "L26", "S4").params == {}

    def test_unknown_lemma(self):
        with pytest.raises(InvalidParameter):
            check_lemma(W("S4"), "L99")

    def test_forged_witness_rejected(self):
        v = check_theorem(W("A4"), HypothesisSpec("T3"), "A4")
        forged = v.to_json()
        forged["witnesses"] = [{"kind": "chief_factor", "lower": {"order": 1, "generators": []},
                                "upper": {"order": 3, "generators": ["(1 2 3)"]}}]
        assert not verify_witness(W("A4"), forged)


@pytest.mark.parametrize("lid", LEMMA_IDS)
@pytest.mark.parametrize("gid", ["S4", "SL2_3", "D8xC3", "A5", "Q8:C3", "C2^4:C3"])
def test_lemmas_hold_on_sample(gid, lid):
    for reading in (("normalizer", "sylow") if LEMMAS[lid].uses_reading else ("normalizer",)):
        v = check_lemma(W(gid), lid, gid, reading)
        assert v.consistent, v.witnesses


class TestCampaign:
    def test_trivial_catalog(self):
        rep = run_campaign([CatalogEntry("C1", "trivial()", 1)], CampaignConfig(checks=["T1", "T2", "P31"]))
        assert rep["verdicts"] == []
        assert rep["summary"]["checked"] == 0
        assert rep["catalog"] == [{"id": "C1", "order": 1, "construction": "trivial()"}]

    def test_empty_catalog_rejected(self):
        with pytest.raises(InvalidParameter):
            run_campaign([], CampaignConfig())

    def test_config_validation(self):
        with pytest.raises(InvalidParameter):
            CampaignConfig(checks=["T9"])
        with pytest.raises(InvalidParameter):
            CampaignConfig(reading="centralizer")
        assert CampaignConfig(reading="both").readings == ("normalizer", "sylow")

    def test_parse_checks(self):
        assert parse_checks("1,2,p31") == ["T1", "T2", "P31"]
        assert parse_checks("l23c,L21,L21") == ["L23c", "L21"]
        assert parse_checks("theorems") == ["T1", "T2", "T3", "T4", "P31"]
        assert len(parse_checks("all")) == 5 + len(LEMMA_IDS)

    def test_entry_errors_are_recorded(self):
        out = run_entry({"id": "broken", "construction": "cyclic(5)", "order": 6}, CampaignConfig())
        assert len(out) == 1 and out[0]["check_id"] == "ERROR" and out[0]["skipped"]

    def test_ordering_and_summary(self):
        cfg = CampaignConfig(checks=["T1", "T3"], weakened=True, ids=["S4", "SL2_3", "C6"])
        rep = run_campaign(config=cfg)
        keys = [Verdict.from_json(v).sort_key() for v in rep["verdicts"]]
        assert keys == sorted(keys)
        s = rep["summary"]
        assert s["checked"] == s["consistent"] + s["inconsistent"]
        assert s["inconsistent_groups"] == ["SL2_3"]
        assert unexpected_inconsistencies(rep, ["SL2_3"]) == []
        assert len(unexpected_inconsistencies(rep)) == 1

    def test_weakened_pairs_only_when_order4_possible(self):
        rep = run_campaign(config=CampaignConfig(checks=["T1"], weakened=True, ids=["C6", "D8"]))
        clause_off = [v for v in rep["verdicts"] if v["params"].get("clause") is False]
        assert {v["group_id"] for v in clause_off} == {"D8"}

    def test_report_file_round_trip(self, tmp_path):
        rep = run_campaign(config=CampaignConfig(checks=["T2", "L22"], ids=["S3", "A4"]))
        path = tmp_path / "r.json"
        write_report(rep, str(path))
        assert read_report(str(path)) == json.loads(json.dumps(rep))
        assert set(rep) == {"config", "catalog", "verdicts", "summary"}
        for v in rep["verdicts"]:
            assert {"group_id", "check_id", "params", "hypothesis_holds", "conclusion_holds",
                    "consistent", "skipped", "witnesses", "runtime_ms"} <= set(v)

    def test_coprime_rows(self):
        cfg = CampaignConfig(checks=["L29", "L211"], ids=["S4"], coprime=True)
        rep = run_campaign(config=cfg)
        ids = {r["id"] for r in rep["catalog"]}
        assert "coprime:Q8|C3" in ids and "S4" in ids
        assert rep["summary"]["inconsistent"] == 0

    def test_jobs_do_not_change_report(self):
        cfg = CampaignConfig(checks=["T1", "T2", "L24c"], ids=ids_up_to(24)[:12])
        a = strip_runtimes(run_campaign(config=cfg, jobs=1))
        b = strip_runtimes(run_campaign(config=cfg, jobs=3))
        assert a == b
