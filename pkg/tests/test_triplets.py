import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import Q, T
from phylocompat.constructions import gen_Qst, gen_Rr, gen_corollary3_triplets
from phylocompat.quartets import compat_quartets_brute
from phylocompat.trees import CapExceeded, LabelError, PhyloError, Triplet, displays_triplet, labels_of
from phylocompat.triplets import (
    build_compat,
    compat_triplets,
    compat_triplets_brute,
    extract_incompatible_subset,
    is_minimally_incompatible_triplets,
    quartets_of_triplets,
    rs_graph,
    theorem7_literal,
    triplets_of_quartets,
)
from phylocompat.verify import random_quartets, random_triplets

FIG4_TRIPLETS = [T("ab|c"), T("de|b"), T("ef|c"), T("ec|b")]


def edge(x, y):
    return frozenset((x, y))


# --------------------------------------------------------------------------- #
# [R, S] graphs
# --------------------------------------------------------------------------- #

def test_rs_graph_fig4():
    g = rs_graph(FIG4_TRIPLETS, "abcdef")
    assert g.edges == {edge("a", "b"), edge("d", "e"), edge("e", "f"), edge("e", "c")}
    assert g.components() == [["a", "b"], ["c", "d", "e", "f"]]
    assert not g.is_connected()


def test_rs_graph_requires_outgroup_in_s():
    g = rs_graph(FIG4_TRIPLETS, "ab")
    assert not g.edges and len(g.components()) == 2
    assert rs_graph([T("ab|c")], "abc").edges == {edge("a", "b")}
    assert rs_graph([T("ab|c")], "abd").edges == frozenset()


# --------------------------------------------------------------------------- #
# deciders
# --------------------------------------------------------------------------- #

def test_fig4_compatible_everywhere():
    rep = build_compat(FIG4_TRIPLETS)
    assert rep.compatible and all(displays_triplet(rep.witness, tr) for tr in FIG4_TRIPLETS)
    assert theorem7_literal(FIG4_TRIPLETS)
    assert compat_triplets_brute(FIG4_TRIPLETS).compatible


def test_two_conflicting_triplets():
    R = [T("ab|c"), T("bc|a")]
    rep = build_compat(R)
    assert not rep.compatible and rep.certificate == frozenset(R)
    assert not theorem7_literal(R)
    assert not compat_triplets_brute(R).compatible


def test_single_triplet():
    assert compat_triplets_brute([T("ab|c")]).compatible
    assert str(build_compat([T("ab|c")]).witness) == "((a,b),c);"


@pytest.mark.parametrize("method", ["build", "brute", "literal"])
def test_known_incompatible_sets(method):
    assert not compat_triplets(gen_corollary3_triplets(4), method).compatible
    assert not compat_triplets(gen_Rr(3), method).compatible


def test_errors():
    with pytest.raises(PhyloError):
        build_compat([])
    with pytest.raises(PhyloError, match="duplicate"):
        compat_triplets([T("ab|c"), T("ba|c")])
    with pytest.raises(PhyloError):
        compat_triplets([T("ab|c")], "magic")
    many = [T("ab|c")] + [T(f"{x}{y}|a") for x, y in ["bd", "de", "ef", "fg", "gh"]]
    with pytest.raises(CapExceeded):
        compat_triplets_brute(many)


def test_build_certificate_is_connected():
    R = gen_corollary3_triplets(6) + [T("xy|z")]
    rep = build_compat(R)
    cert = sorted(rep.certificate, key=str)
    assert not rep.compatible
    assert rs_graph(cert, labels_of(cert)).is_connected() and len(labels_of(cert)) >= 3


triplet_sets = st.integers(0, 10**9).map(
    lambda seed: random_triplets(random.Random(seed), max_labels=6, min_size=1, max_size=7))


@settings(max_examples=150, deadline=None)
@given(triplet_sets)
def test_three_deciders_agree(R):
    b = build_compat(R)
    assert b.compatible == theorem7_literal(R) == compat_triplets_brute(R).compatible
    if b.compatible:
        assert all(displays_triplet(b.witness, tr) for tr in R)
        assert b.witness.leaves == labels_of(R)


@settings(max_examples=60, deadline=None)
@given(triplet_sets, st.data())
def test_compatibility_is_monotone(R, data):
    if build_compat(R).compatible:
        keep = data.draw(st.lists(st.sampled_from(R), min_size=1, unique=True))
        assert build_compat(keep).compatible


# --------------------------------------------------------------------------- #
# minimality and extraction
# --------------------------------------------------------------------------- #

def test_cyclic_triple():
    R = [T("ab|c"), T("bc|a"), T("ca|b")]
    # every 2-subset is already incompatible
    for pair in itertools.combinations(R, 2):
        assert not compat_triplets_brute(list(pair)).compatible
    assert not is_minimally_incompatible_triplets(R).minimal
    assert extract_incompatible_subset(R) == [T("ac|b"), T("bc|a")]


def test_extract_returns_tight_family_unchanged():
    R = gen_corollary3_triplets(5)
    assert sorted(extract_incompatible_subset(R), key=str) == sorted(R, key=str)


def test_extract_drops_extra_triplet():
    R = gen_corollary3_triplets(5)
    extra = Triplet.of("b1", "b2", "x")
    assert build_compat(R[:-1] + [extra]).compatible
    # brute force over every subset: the only minimal incompatible subset is the original family
    full = R + [extra]
    minimal = [
        set(sub) for k in range(1, len(full) + 1) for sub in itertools.combinations(full, k)
        if not compat_triplets_brute(list(sub)).compatible
        and is_minimally_incompatible_triplets(list(sub)).minimal
    ]
    assert minimal == [set(R)]
    assert set(extract_incompatible_subset(full)) == set(R)


def test_extract_rejects_compatible():
    with pytest.raises(PhyloError):
        extract_incompatible_subset(FIG4_TRIPLETS)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_extraction_properties(seed):
    rng = random.Random(seed)
    R = random_triplets(rng, max_labels=7, min_size=3, max_size=10)
    if build_compat(R).compatible:
        return
    sub = extract_incompatible_subset(R)
    assert set(sub) <= set(R)
    assert is_minimally_incompatible_triplets(sub).minimal
    n = len(labels_of(sub))
    assert len(sub) <= n - 1
    assert rs_graph(sub, labels_of(sub)).is_connected()


@pytest.mark.parametrize("seed", range(20))
def test_minimal_sets_are_small_and_connected(seed):
    """Any minimally incompatible set has at most |L|-1 triplets and a connected [R, L(R)]."""
    rng = random.Random(seed)
    R = random_triplets(rng, max_labels=5, min_size=2, max_size=6)
    for k in range(1, len(R) + 1):
        for sub in itertools.combinations(R, k):
            sub = list(sub)
            if is_minimally_incompatible_triplets(sub).minimal:
                assert len(sub) <= len(labels_of(sub)) - 1
                assert rs_graph(sub, labels_of(sub)).is_connected()


# --------------------------------------------------------------------------- #
# quartets <-> triplets
# --------------------------------------------------------------------------- #

def test_triplets_of_q22():
    assert set(triplets_of_quartets(gen_Qst(2, 2), "a2")) == {
        Triplet.of("a1", "b1", "b2"), Triplet.of("b1", "b2", "a1")}


def test_triplets_of_q23():
    R = triplets_of_quartets(gen_Qst(2, 3), "a2")
    assert set(map(str, R)) == {"a1 b1 | b3", "b1 b2 | a1", "b2 b3 | a1"}
    assert len(labels_of(R)) == 4
    assert is_minimally_incompatible_triplets(R).minimal


def test_single_lift():
    assert triplets_of_quartets([Q("ab|cl")], "l") == [T("ab|c")]
    assert quartets_of_triplets([T("ab|c")], "l") == [Q("ab|cl")]
    with pytest.raises(LabelError):
        triplets_of_quartets([Q("ab|cd")], "l")
    with pytest.raises(LabelError):
        quartets_of_triplets([T("ab|c")], "a")


def test_fig4_round_trip():
    assert triplets_of_quartets(quartets_of_triplets(FIG4_TRIPLETS, "z"), "z") == FIG4_TRIPLETS


def test_rr_lift_is_characters_for_r():
    from phylocompat.characters import c_of_q, max_states

    for r in range(2, 6):
        lift = quartets_of_triplets(gen_Rr(r), "ell")
        assert len(lift) == r and len(labels_of(lift)) == r + 2
        assert max_states(c_of_q(lift)) == r
        assert not compat_quartets_brute(lift).compatible


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_quartet_triplet_verdicts_agree(seed):
    rng = random.Random(seed)
    R = random_triplets(rng, max_labels=6, min_size=1, max_size=7)
    Qs = quartets_of_triplets(R, "ell")
    assert compat_quartets_brute(Qs).compatible == build_compat(R).compatible


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_shared_label_quartets_map_to_triplets(seed):
    rng = random.Random(seed)
    Qs = [q for q in random_quartets(rng, 7, 8) if "x1" in q.labels]
    if not Qs:
        return
    R = triplets_of_quartets(Qs, "x1")
    assert compat_quartets_brute(Qs).compatible == build_compat(R).compatible
    assert quartets_of_triplets(R, "x1") == Qs
