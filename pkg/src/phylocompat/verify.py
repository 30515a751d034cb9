"""Desk-scale verification suites, one per reproduced result.

Each ``plan_*`` function expands its range parameters into independent tasks.
A task is ``(instance, func, args)`` where ``func(*args)`` returns
``(passed, detail)``; tasks are module-level callables so they can run in a
process pool without changing report order.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from . import constructions as cons
from .characters import c_of_q, compat_characters_brute, is_minimally_incompatible_characters, max_states
from .quartets import (
    apply_sequence,
    compat_quartets_brute,
    compat_quartets_unification,
    find_complete_unification,
    quartet_graph,
)
from .trees import CapExceeded, Quartet, Triplet, displays_quartet, displays_triplet, labels_of
from .triplets import (
    build_compat,
    compat_triplets_brute,
    extract_incompatible_subset,
    is_minimally_incompatible_triplets,
    quartets_of_triplets,
    rs_graph,
    theorem7_literal,
    triplets_of_quartets,
)

LEMMA3_PAIRS = ((2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 3), (3, 4), (3, 5), (4, 4))
FIG1_QUARTETS = (Quartet.of("a", "b", "c", "e"), Quartet.of("c", "d", "b", "f"), Quartet.of("a", "d", "e", "f"))
FIG2_STEPS = (("a", "b"), ("e", "f"), ("g", "h"))


@dataclass(frozen=True)
class Check:
    suite: str
    instance: str
    passed: bool
    detail: str = ""


Task = tuple  # (instance, func, args)


# --------------------------------------------------------------------------- #
# Random instances
# --------------------------------------------------------------------------- #

def random_quartets(rng: random.Random, max_labels: int = 6, max_size: int = 8) -> list[Quartet]:
    n = rng.randint(4, max_labels)
    labels = [f"x{i}" for i in range(1, n + 1)]
    k = rng.randint(1, max_size)
    out: list[Quartet] = []
    for _ in range(4 * k):
        if len(out) == k:
            break
        w, x, y, z = rng.sample(labels, 4)
        q = Quartet.of(w, x, y, z)
        if q not in out:
            out.append(q)
    return out


def random_triplets(rng: random.Random, max_labels: int = 6, min_size: int = 1,
                    max_size: int = 8, min_labels: int = 3) -> list[Triplet]:
    n = rng.randint(min_labels, max_labels)
    labels = [f"x{i}" for i in range(1, n + 1)]
    k = rng.randint(min_size, max_size)
    out: list[Triplet] = []
    for _ in range(6 * k):
        if len(out) == k:
            break
        x, y, z = rng.sample(labels, 3)
        tr = Triplet.of(x, y, z)
        if tr not in out:
            out.append(tr)
    return out


def _fmt(items) -> str:
    return "{" + ", ".join(str(x).replace(" ", "") for x in items) + "}"


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise CapExceeded(f"{what}: {n} labels exceeds cap {cap}")


# --------------------------------------------------------------------------- #
# Task bodies
# --------------------------------------------------------------------------- #

def _obs1(s: int, t: int):
    got = len(cons.gen_Qst(s, t))
    want = (s - 1) * (t - 1) + 1
    return got == want, f"|Q|={got} expected {want}"


def _lemma2(s: int, t: int):
    g = cons.g_map(s, t)
    mapped = {cons.relabel_quartet(q, g) for q in cons.gen_Qst(s, t)}
    target = set(cons.gen_Qst(t, s))
    return mapped == target, f"g(Q_{s},{t}) {'==' if mapped == target else '!='} Q_{t},{s}"


def _lemma3(s: int, t: int):
    rep = compat_quartets_brute(cons.gen_Qst(s, t))
    return not rep.compatible, f"brute verdict {rep.verdict}"


def _lemma4(s: int, t: int):
    """Every Q_{s,t} minus one quartet is displayed by its explicit witness, which misses the dropped one."""
    Q = cons.gen_Qst(s, t)
    bad = []
    for q in Q:
        if q == cons.q0(s, t):
            tree = cons.witness_tree_missing_q0(s, t)
        else:
            x, y = _qij_index(q)
            tree = cons.witness_tree_missing_qxy(s, t, x, y)
        rest_ok = all(displays_quartet(tree, p) for p in Q if p != q)
        if not rest_ok or displays_quartet(tree, q):
            bad.append(str(q))
    if bad:
        return False, f"witness failures: {bad}"
    return True, f"{len(Q)} witness trees verified"


def _qij_index(q: Quartet) -> tuple[int, int]:
    x = min(int(v[1:]) for v in q.labels if v.startswith("a"))
    y = min(int(v[1:]) for v in q.labels if v.startswith("b"))
    return x, y


def _thm3(n: int):
    Q = cons.gen_theorem3_set(n)
    want = cons.theorem3_size(n)
    size_ok = len(Q) == want and len(labels_of(Q)) == n
    inc_ok, inc_detail = _lemma3(n // 2, (n + 1) // 2)
    wit_ok, wit_detail = _lemma4(n // 2, (n + 1) // 2)
    ok = size_ok and inc_ok and wit_ok
    return ok, f"|Q|={len(Q)} expected {want}; {inc_detail}; {wit_detail}"


def _lemma1(Q: Sequence[Quartet]):
    q_rep = compat_quartets_brute(Q)
    c_rep = compat_characters_brute(c_of_q(Q))
    return q_rep.verdict == c_rep.verdict, f"quartets {q_rep.verdict}, characters {c_rep.verdict}"


def _thm5(r: int):
    C = cons.gen_theorem5_set(r)
    want = cons.theorem5_size(r)
    rep = is_minimally_incompatible_characters(C)
    states = max_states(C)
    ok = rep.minimal and len(C) == want and states <= r
    return ok, f"|C|={len(C)} expected {want}; max states {states}; minimally incompatible={rep.minimal}"


def _thm2(Q: Sequence[Quartet]):
    brute = compat_quartets_brute(Q)
    seq = find_complete_unification(quartet_graph(Q))
    ok = (seq is not None) == brute.compatible
    if ok and seq is not None:
        final = apply_sequence(quartet_graph(Q), [s.unified for s in seq])[-1]
        ok = final.is_edgeless()
    found = "found" if seq is not None else "none"
    return ok, f"brute {brute.verdict}; complete unification {found}"


def _fig2_sequence():
    g = quartet_graph(FIG1_QUARTETS)
    handle = {next(iter(ls)): v for v, ls in g.classes.items()}
    graphs = [g]
    names = dict(handle)
    for step, new_name in zip(FIG2_STEPS, "ghi"):
        U = [names[x] for x in step]
        graphs.append(apply_sequence(graphs[-1], [U])[-1])
        names[new_name] = max(graphs[-1].classes)
    edge_counts = [h.num_edges() for h in graphs]
    ok = edge_counts == [6, 4, 2, 0] and len(graphs[-1].classes) == 3
    return ok, f"edge counts {edge_counts}; final vertices {len(graphs[-1].classes)}"


def _thm7(R: Sequence[Triplet]):
    b = build_compat(R)
    lit = theorem7_literal(R)
    brute = compat_triplets_brute(R)
    ok = b.compatible == lit == brute.compatible
    if ok and b.compatible:
        ok = all(displays_triplet(b.witness, tr) for tr in R)
    return ok, f"build {b.verdict}, literal {'compatible' if lit else 'incompatible'}, brute {brute.verdict}"


def _thm6(Q: Sequence[Quartet], ell: str):
    R = triplets_of_quartets(Q, ell)
    q_rep = compat_quartets_brute(Q)
    r_rep = build_compat(R)
    back = quartets_of_triplets(R, ell) == list(Q)
    ok = q_rep.compatible == r_rep.compatible and len(R) == len(Q) and back
    return ok, f"quartets {q_rep.verdict}, triplets {r_rep.verdict}, round trip {'ok' if back else 'broken'}"


def _cor3(n: int):
    R = cons.gen_corollary3_triplets(n)
    rep = is_minimally_incompatible_triplets(R)
    ok = len(R) == n - 1 and len(labels_of(R)) == n and rep.minimal
    return ok, f"|R|={len(R)} over {len(labels_of(R))} labels; minimally incompatible={rep.minimal}"


def _thm8(R: Sequence[Triplet]):
    sub = extract_incompatible_subset(R)
    n_sub = len(labels_of(sub))
    proper = set(sub) < set(R)
    minimal = is_minimally_incompatible_triplets(sub).minimal
    connected = rs_graph(sub, labels_of(sub)).is_connected()
    bound = len(sub) <= n_sub - 1
    ok = proper and minimal and connected and bound
    return ok, (f"|R|={len(R)} -> |R'|={len(sub)} over {n_sub} labels; minimal={minimal}; "
                f"[R',L(R')] connected={connected}")


def _rr(r: int):
    R = cons.gen_Rr(r)
    rep = is_minimally_incompatible_triplets(R)
    Q = quartets_of_triplets(R, cons.FRESH_LABEL)
    q_rep = compat_quartets_unification(Q)
    ok = len(R) == r and rep.minimal and not q_rep.compatible
    if r + 2 <= 9:
        ok = ok and not compat_quartets_brute(Q).compatible
    return ok, f"|R_r|={len(R)}; minimally incompatible={rep.minimal}; quartet lift {q_rep.verdict}"


# --------------------------------------------------------------------------- #
# Plans
# --------------------------------------------------------------------------- #

def plan_obs1(max: int = 8, **_) -> list[Task]:
    return [(f"s={s} t={t}", _obs1, (s, t)) for s in range(2, max + 1) for t in range(2, max + 1)]


def plan_lemma2(max: int = 8, **_) -> list[Task]:
    return [(f"s={s} t={t}", _lemma2, (s, t)) for s in range(2, max + 1) for t in range(2, max + 1)]


def plan_lemma3_4(max_labels: int = 8, max: int = 6, **_) -> list[Task]:
    tasks = []
    for s, t in LEMMA3_PAIRS:
        if s + t <= max_labels:
            _check_cap(s + t, 9, "lemma3")
            tasks.append((f"lemma3 s={s} t={t}", _lemma3, (s, t)))
    pairs = {(s, t) for s in range(2, max + 1) for t in range(2, max + 1)} | set(LEMMA3_PAIRS)
    for s, t in sorted(pairs):
        tasks.append((f"lemma4 s={s} t={t}", _lemma4, (s, t)))
    return tasks


def plan_thm3(n_max: int = 8, **_) -> list[Task]:
    _check_cap(n_max, 9, "thm3")
    return [(f"n={n}", _thm3, (n,)) for n in range(4, n_max + 1)]


def plan_lemma1(count: int = 200, seed: int = 0, max_labels: int = 6, **_) -> list[Task]:
    _check_cap(max_labels, 9, "lemma1")
    rng = random.Random(seed)
    tasks = [(f"random#{i} {_fmt(Q)}", _lemma1, (Q,))
             for i, Q in enumerate(random_quartets(rng, max_labels) for _ in range(count))]
    for s in range(2, 6):
        for t in range(2, 6):
            if s + t <= 7:
                tasks.append((f"Q_{s},{t}", _lemma1, (cons.gen_Qst(s, t),)))
    return tasks


def plan_thm5(r_max: int = 5, **_) -> list[Task]:
    _check_cap(r_max + 2, 9, "thm5")
    return [(f"r={r}", _thm5, (r,)) for r in range(2, r_max + 1)]


def plan_thm2(count: int = 200, seed: int = 0, max_labels: int = 6, **_) -> list[Task]:
    _check_cap(max_labels, 9, "thm2-agreement")
    rng = random.Random(seed)
    tasks = [(f"random#{i} {_fmt(Q)}", _thm2, (Q,))
             for i, Q in enumerate(random_quartets(rng, max_labels) for _ in range(count))]
    tasks.append(("fig1", _thm2, (list(FIG1_QUARTETS),)))
    tasks.append(("Q_2,2", _thm2, (cons.gen_Qst(2, 2),)))
    tasks.append(("fig2 sequence", _fig2_sequence, ()))
    return tasks


def plan_thm7(count: int = 300, seed: int = 0, max_labels: int = 6, **_) -> list[Task]:
    _check_cap(max_labels, 7, "thm7-agreement")
    rng = random.Random(seed)
    return [(f"random#{i} {_fmt(R)}", _thm7, (R,))
            for i, R in enumerate(random_triplets(rng, max_labels) for _ in range(count))]


def plan_thm6(count: int = 100, seed: int = 0, max_labels: int = 7, **_) -> list[Task]:
    _check_cap(max_labels, 9, "thm6")
    rng = random.Random(seed)
    tasks = []
    for i in range(count):
        R = random_triplets(rng, max_labels - 1)
        Q = quartets_of_triplets(R, "ell")
        tasks.append((f"random#{i} {_fmt(Q)}", _thm6, (Q, "ell")))
    return tasks


def plan_cor3(n_max: int = 12, **_) -> list[Task]:
    return [(f"n={n}", _cor3, (n,)) for n in range(3, n_max + 1)]


def plan_thm8(count: int = 100, seed: int = 0, max_labels: int = 8, **_) -> list[Task]:
    rng = random.Random(seed)
    tasks = []
    while len(tasks) < count:
        R = random_triplets(rng, max_labels, min_size=3, max_size=2 * max_labels + 2, min_labels=3)
        if len(R) > len(labels_of(R)) - 1 and not build_compat(R).compatible:
            tasks.append((f"random#{len(tasks)} {_fmt(R)}", _thm8, (R,)))
    return tasks


def plan_rr(r_max: int = 8, **_) -> list[Task]:
    return [(f"r={r}", _rr, (r,)) for r in range(2, r_max + 1)]


SUITES: dict[str, Callable[..., list[Task]]] = {
    "obs1": plan_obs1,
    "lemma1": plan_lemma1,
    "lemma2": plan_lemma2,
    "lemma3-4": plan_lemma3_4,
    "thm2-agreement": plan_thm2,
    "thm3": plan_thm3,
    "thm5": plan_thm5,
    "thm6": plan_thm6,
    "thm7-agreement": plan_thm7,
    "thm8": plan_thm8,
    "cor3": plan_cor3,
    "rr": plan_rr,
}


def _run_task(task: Task) -> tuple[bool, str]:
    _, func, args = task
    return func(*args)


def run_suite(name: str, jobs: int = 1, **params) -> list[Check]:
    """Run one suite; report order follows the plan regardless of ``jobs``."""
    tasks = SUITES[name](**params)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_run_task(t) for t in tasks]
    return [Check(name, inst, ok, detail) for (inst, _, _), (ok, detail) in zip(tasks, results)]
