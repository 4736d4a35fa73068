from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import as_set, group, ids_up_to, perm
from strongclosed import (
    HypothesisSpec,
    InvalidParameter,
    NotASubgroup,
    NotNormal,
    is_h_subgroup,
    is_strongly_closed,
    is_strongly_closed_in_G,
    strongly_closed,
    theorem_hypothesis,
)
from strongclosed.closure import sylow_containing, valid_target_orders
from strongclosed.group import center, normalizer
from strongclosed.subgroups import all_subgroups, subgroups_of_order, sylow_subgroup


def W(gid):
    return group(gid).whole


def S4_sub(*cycles):
    return group("S4").subgroup([perm(c, 4) for c in cycles])


def every_subgroup(G):
    return [H for cls in all_subgroups(G) for H in cls.conjugates]


class TestStronglyClosed:
    def test_normal_in_whole(self):
        V = S4_sub("(1 2)(3 4)", "(1 3)(2 4)")
        assert is_strongly_closed(V, W("S4"), W("S4"))

    def test_s4_witness(self):
        H = S4_sub("(1 2)(3 4)")
        K = S4_sub("(1 2 3 4)", "(1 3)")
        r = is_strongly_closed(H, K, W("S4"))
        assert not r
        a, g = r.witness
        assert a == perm("(1 2)(3 4)", 4)
        b = a ^ g
        assert b in K and b not in H
        assert b == perm("(1 3)(2 4)", 4)

    def test_sl2_17_center_in_sylow(self, SL2_17):
        G = SL2_17.whole
        Z = center(G)
        P = sylow_subgroup(G, 2)
        assert Z <= P
        assert subgroups_of_order(P, 2) == [Z]
        assert is_strongly_closed(Z, P, G)
        assert is_strongly_closed_in_G(Z, G)

    def test_containment_enforced(self):
        with pytest.raises(NotASubgroup):
            is_strongly_closed(S4_sub("(1 2)"), S4_sub("(1 2 3)"), W("S4"))


class TestClosedInG:
    def test_normal(self):
        assert is_strongly_closed_in_G(S4_sub("(1 2)(3 4)", "(1 3)(2 4)"), W("S4"))

    def test_transposition_in_s3(self):
        H = group("S3").subgroup([perm("(1 2)", 3)])
        assert is_strongly_closed_in_G(H, W("S3"))

    def test_double_transposition_in_s4(self):
        H = S4_sub("(1 2)(3 4)")
        assert normalizer(W("S4"), H).order == 8
        assert not is_strongly_closed_in_G(H, W("S4"))


class TestHSubgroup:
    def test_normal(self):
        assert is_h_subgroup(S4_sub("(1 2)(3 4)", "(1 3)(2 4)"), W("S4"))

    def test_sylow_of_sl2_17(self, SL2_17):
        assert is_h_subgroup(sylow_subgroup(SL2_17.whole, 2), SL2_17.whole)

    def test_double_transposition(self):
        H = S4_sub("(1 2)(3 4)")
        r = is_h_subgroup(H, W("S4"))
        assert not r
        g, b = r.witness
        N = normalizer(W("S4"), H)
        assert b in N and b not in H
        assert any(h ^ g == b for h in H.elements())


class TestHypothesis:
    def test_sl2_17_clause_on(self, SL2_17):
        r = theorem_hypothesis(SL2_17.whole, HypothesisSpec("T1", 2, True))
        assert not r
        H, (a, g) = r.witness
        assert H.order == 4
        assert (a ^ g) not in H

    def test_sl2_17_clause_off(self, SL2_17):
        assert theorem_hypothesis(SL2_17.whole, HypothesisSpec("T1", 2, False))

    @pytest.mark.parametrize("gid", ["C12", "D6", "C20", "D10xC3", "C3:C4"])
    def test_cyclic_branch(self, gid):
        G = W(gid)
        for d in valid_target_orders(sylow_subgroup(G, 2), 2) or [None]:
            r = theorem_hypothesis(G, HypothesisSpec("T1", d))
            assert r and r.witness == "cyclic"

    def test_non_cyclic_needs_valid_order(self):
        with pytest.raises(InvalidParameter):
            theorem_hypothesis(W("S4"), HypothesisSpec("T1", 8))
        with pytest.raises(InvalidParameter):
            theorem_hypothesis(W("S4"), HypothesisSpec("T1", None))

    def test_p31_excludes_order_two(self):
        with pytest.raises(InvalidParameter):
            theorem_hypothesis(W("D16"), HypothesisSpec("P31", 2))
        assert valid_target_orders(sylow_subgroup(W("D16"), 2), 2, strict_two=True) == [4, 8]

    def test_unknown_theorem(self):
        with pytest.raises(InvalidParameter):
            HypothesisSpec("T9")

    def test_t4_requires_normal_e(self):
        E = S4_sub("(1 2)")
        with pytest.raises(NotNormal):
            theorem_hypothesis(W("S4"), HypothesisSpec("T4", normal_subgroup_E=E))
        with pytest.raises(InvalidParameter):
            theorem_hypothesis(W("S4"), HypothesisSpec("T4"))

    def test_t2_uses_smallest_prime(self):
        # C7:C3 has odd order; its Sylow 3-subgroup is cyclic
        assert theorem_hypothesis(W("C7:C3"), HypothesisSpec("T2", None))
        assert theorem_hypothesis(W("C1"), HypothesisSpec("T2", None))

    def test_t3_reports_good_orders(self):
        r = theorem_hypothesis(W("D8xC3"), HypothesisSpec("T3"))
        assert r and r.witness[3] == "cyclic" and r.witness[2]

    def test_t3_failure_names_prime(self):
        r = theorem_hypothesis(W("A4"), HypothesisSpec("T3"))
        assert not r and r.witness["prime"] == 2


class TestReadings:
    @pytest.mark.parametrize("gid", ["S4", "D8xC3", "SL2_3", "A5", "S3xD8"])
    def test_sylow_reading_uses_containing_sylow(self, gid):
        G = W(gid)
        P = sylow_subgroup(G, 2)
        for H in every_subgroup(P):
            if H.order == 1:
                continue
            S = sylow_containing(G, H)
            assert H <= S and S.order == P.order
            assert bool(strongly_closed(H, G, "sylow")) == bool(is_strongly_closed(H, S, G))
            assert bool(strongly_closed(H, G, "sylow", P)) == bool(is_strongly_closed(H, P, G))

    def test_unknown_reading(self):
        with pytest.raises(InvalidParameter):
            strongly_closed(W("S4"), W("S4"), "centralizer")


@pytest.mark.parametrize("gid", ids_up_to(24))
def test_predicates_match_brute_force(gid):
    G = group(gid)
    Gs = as_set(G)
    subs = every_subgroup(G.whole)
    sets = {H.key: as_set(H) for H in subs}
    for H in subs:
        Hs = sets[H.key]
        assert bool(is_h_subgroup(H, G.whole)) == oracles.h_subgroup(Hs, Gs)
        assert bool(is_strongly_closed_in_G(H, G.whole)) == oracles.strongly_closed(
            Hs, oracles.normalizer(Gs, Hs), Gs)
        for K in subs:
            if H <= K:
                assert bool(is_strongly_closed(H, K, G.whole)) == oracles.strongly_closed(Hs, sets[K.key], Gs)


CORPUS_60 = ids_up_to(60)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CORPUS_60), st.data())
def test_definitions_agree_and_k_equal_h_is_closed(gid, data):
    G = W(gid)
    subs = every_subgroup(G)
    H = data.draw(st.sampled_from(subs))
    assert is_strongly_closed(H, H, G)
    assert bool(is_h_subgroup(H, G)) == bool(is_strongly_closed_in_G(H, G))
    supers = [K for K in subs if H <= K]
    K = data.draw(st.sampled_from(supers))
    # closed in a larger K implies closed in any intermediate subgroup
    if is_strongly_closed(H, K, G):
        for L in supers:
            if L <= K:
                assert is_strongly_closed(H, L, G)
