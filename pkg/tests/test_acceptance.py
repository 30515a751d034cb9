"""Acceptance gate: one test per criterion at its stated parameters.

Each test records a ``criterion N: PASS|FAIL`` line that the terminal summary
prints in criterion order.
"""

import itertools
import random
import time

from conftest import ACCEPTANCE_LINES
from phylocompat.characters import compat_characters_brute, max_states
from phylocompat.constructions import (
    FRESH_LABEL,
    g_map,
    gen_corollary3_triplets,
    gen_Qst,
    gen_Rr,
    gen_theorem3_set,
    gen_theorem5_set,
    q0,
    qij,
    relabel_quartet,
    witness_tree_missing_q0,
    witness_tree_missing_qxy,
)
from phylocompat.quartets import (
    compat_quartets_brute,
    compat_quartets_unification,
    find_complete_unification,
    quartet_graph,
)
from phylocompat.trees import displays_quartet, labels_of
from phylocompat.triplets import (
    build_compat,
    compat_triplets_brute,
    extract_incompatible_subset,
    is_minimally_incompatible_triplets,
    quartets_of_triplets,
    rs_graph,
    theorem7_literal,
)
from phylocompat.verify import FIG1_QUARTETS, LEMMA3_PAIRS, random_triplets, run_suite


def record(n, ok, detail):
    ACCEPTANCE_LINES.append(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, f"criterion {n}: {detail}"


def failures(checks):
    return [f"{c.instance}: {c.detail}" for c in checks if not c.passed]


def witnesses(s, t):
    out = {q0(s, t): witness_tree_missing_q0(s, t)}
    for x, y in itertools.product(range(1, s), range(1, t)):
        out[qij(x, y)] = witness_tree_missing_qxy(s, t, x, y)
    return out


def witness_ok(s, t):
    Q = gen_Qst(s, t)
    return all(all(displays_quartet(tree, p) for p in Q if p != q) for q, tree in witnesses(s, t).items())


def test_criterion_01_family_sizes():
    bad = [(s, t) for s in range(2, 9) for t in range(2, 9)
           if len(gen_Qst(s, t)) != (s - 1) * (t - 1) + 1]
    record(1, not bad, f"|Q_s,t| = (s-1)(t-1)+1 for all 49 pairs in [2,8]^2; mismatches {bad}")


def test_criterion_02_families_incompatible():
    start = time.perf_counter()
    compatible = [(s, t) for s, t in LEMMA3_PAIRS if compat_quartets_brute(gen_Qst(s, t)).compatible]
    elapsed = time.perf_counter() - start
    record(2, not compatible and elapsed < 120,
           f"{len(LEMMA3_PAIRS)} Q_s,t incompatible by brute force in {elapsed:.2f} s; compatible {compatible}")


def test_criterion_03_witness_trees():
    pairs = sorted(set(LEMMA3_PAIRS) | {(s, t) for s in range(2, 7) for t in range(2, 7)})
    bad = [(s, t) for s, t in pairs if not witness_ok(s, t)]
    record(3, not bad, f"witness trees display Q_s,t minus q for {len(pairs)} (s,t) pairs; failures {bad}")


def test_criterion_04_quartet_lower_bound():
    bad = []
    for n in range(4, 9):
        s, t = n // 2, (n + 1) // 2
        Q = gen_theorem3_set(n)
        size = ((n - 2) // 2) * ((n - 1) // 2) + 1
        ok = (len(Q) == size and len(labels_of(Q)) == n and (s, t) in LEMMA3_PAIRS
              and not compat_quartets_brute(Q).compatible and witness_ok(s, t))
        if not ok:
            bad.append(n)
    record(4, not bad, f"n=4..8 minimally incompatible with size floor*ceil+1; failures {bad}")


def test_criterion_05_quartet_character_equivalence():
    checks = run_suite("lemma1", count=200, seed=0, max_labels=6)
    bad = failures(checks)
    record(5, len(checks) == 200 + 10 and not bad,
           f"{len(checks)} quartet/character verdict pairs, {len(bad)} disagreements")


def test_criterion_06_character_lower_bound():
    start = time.perf_counter()
    bad = []
    sizes = []
    for r in range(2, 6):
        C = gen_theorem5_set(r)
        sizes.append(len(C))
        ok = len(C) == (r // 2) * ((r + 1) // 2) + 1 and max_states(C) <= r
        ok = ok and not compat_characters_brute(C).compatible
        ok = ok and all(compat_characters_brute([x for x in C if x != chi]).compatible for chi in C)
        if not ok:
            bad.append(r)
    elapsed = time.perf_counter() - start
    record(6, not bad and sizes[2] == 5 and elapsed < 300,
           f"r=2..5 sizes {sizes} minimally incompatible in {elapsed:.2f} s; failures {bad}")


def test_criterion_07_unification_agreement():
    checks = run_suite("thm2-agreement", count=200, seed=0, max_labels=6)
    bad = failures(checks)
    fig2 = [c for c in checks if c.instance == "fig2 sequence"]
    # independent spot check on the two named instances
    named_ok = (find_complete_unification(quartet_graph(FIG1_QUARTETS)) is not None
                and find_complete_unification(quartet_graph(gen_Qst(2, 2))) is None)
    record(7, not bad and len(fig2) == 1 and fig2[0].passed and named_ok,
           f"{len(checks) - 1} unification/brute comparisons plus the reference sequence, {len(bad)} failures")


def test_criterion_08_triplet_agreement():
    start = time.perf_counter()
    rng = random.Random(0)
    disagree = 0
    for _ in range(300):
        R = random_triplets(rng, max_labels=6)
        if not build_compat(R).compatible == theorem7_literal(R) == compat_triplets_brute(R).compatible:
            disagree += 1
    elapsed = time.perf_counter() - start
    record(8, disagree == 0 and elapsed < 120,
           f"300 random triplet sets, {disagree} disagreements, {elapsed:.2f} s")


def test_criterion_09_tight_triplet_family():
    bad = []
    for n in range(3, 13):
        R = gen_corollary3_triplets(n)
        ok = len(R) == n - 1 and len(labels_of(R)) == n and not build_compat(R).compatible
        ok = ok and all(build_compat([x for x in R if x != tr]).compatible for tr in R)
        if not ok:
            bad.append(n)
    record(9, not bad, f"n=3..12: n-1 triplets over n labels, minimally incompatible; failures {bad}")


def test_criterion_10_extraction():
    start = time.perf_counter()
    rng = random.Random(0)
    done = bad = 0
    while done < 100:
        R = random_triplets(rng, max_labels=8, min_size=3, max_size=18)
        if len(R) <= len(labels_of(R)) - 1 or build_compat(R).compatible:
            continue
        done += 1
        sub = extract_incompatible_subset(R)
        ok = (set(sub) < set(R) and not build_compat(sub).compatible
              and len(sub) <= len(labels_of(sub)) - 1
              and all(build_compat([x for x in sub if x != tr]).compatible for tr in sub)
              and rs_graph(sub, labels_of(sub)).is_connected())
        bad += not ok
    elapsed = time.perf_counter() - start
    record(10, bad == 0 and elapsed < 120,
           f"100 incompatible sets with |R| > |L|-1, {bad} extraction failures, {elapsed:.2f} s")


def test_criterion_11_rr_family():
    bad = []
    for r in range(2, 9):
        R = gen_Rr(r)
        lift = quartets_of_triplets(R, FRESH_LABEL)
        verdicts = {compat_quartets_unification(lift).compatible, build_compat(R).compatible}
        if r + 2 <= 9:
            verdicts.add(compat_quartets_brute(lift).compatible)
        ok = len(R) == r and is_minimally_incompatible_triplets(R).minimal and verdicts == {False}
        if not ok:
            bad.append(r)
    record(11, not bad, f"r=2..8 minimally incompatible, lifts incompatible and agreeing; failures {bad}")


def test_criterion_12_relabeling():
    bad = [(s, t) for s in range(2, 9) for t in range(2, 9)
           if {relabel_quartet(q, g_map(s, t)) for q in gen_Qst(s, t)} != set(gen_Qst(t, s))]
    record(12, not bad, f"g(Q_s,t) = Q_t,s for all 49 pairs in [2,8]^2; mismatches {bad}")
