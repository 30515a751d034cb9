"""Rooted triplet compatibility through [R, S] graph connectivity."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .quartets import CompatReport, MinimalityReport, Verdict, check_distinct, minimality
from .trees import (
    CapExceeded,
    LabelError,
    PhyloError,
    Quartet,
    RootedTree,
    Triplet,
    count_rooted_binary,
    labels_of,
    label_key,
    rooted_cluster_systems,
    rooted_tree_from_clusters,
    sort_labels,
)

DEFAULT_MAX_ROOTED_LABELS = 7
LITERAL_MAX_LABELS = 12


@dataclass(frozen=True)
class RSGraph:
    """Vertices S; edge {a, b} whenever some ab|c in R has a, b, c all in S."""

    vertices: frozenset
    edges: frozenset

    def components(self) -> list[list[str]]:
        """Connected components, labels sorted, components ordered by smallest label."""
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            u, v = tuple(e)
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        groups: dict[str, list[str]] = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        comps = [sort_labels(g) for g in groups.values()]
        comps.sort(key=lambda c: label_key(c[0]))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def rs_graph(R: Iterable[Triplet], S: Iterable[str]) -> RSGraph:
    S = frozenset(S)
    edges = frozenset(frozenset(tr.cherry) for tr in R if tr.labels <= S)
    return RSGraph(S, edges)


def _restrict_triplets(R: Sequence[Triplet], S: Iterable[str]) -> list[Triplet]:
    S = frozenset(S)
    return [tr for tr in R if tr.labels <= S]


def _build(R: list[Triplet], labels: list[str]):
    """Returns (nested tree, None) or (None, the label set whose [R, S] is connected)."""
    if len(labels) == 1:
        return labels[0], None
    if len(labels) == 2:
        return tuple(labels), None
    comps = rs_graph(R, labels).components()
    if len(comps) == 1:
        return None, labels
    kids = []
    for comp in comps:
        sub, bad = _build(_restrict_triplets(R, comp), comp)
        if bad is not None:
            return None, bad
        kids.append(sub)
    return tuple(kids), None


def build_compat(R: Iterable[Triplet]) -> CompatReport:
    """Recursive connectivity decision.

    Compatible: a rooted witness displaying every triplet. Incompatible: the
    triplets inside a label set S with [R, S] connected, |S| >= 3.
    """
    R = list(R)
    if not R:
        raise PhyloError("empty triplet set")
    labels = sort_labels(labels_of(R))
    nested, bad = _build(R, labels)
    if bad is not None:
        return CompatReport(Verdict.INCOMPATIBLE,
                            certificate=frozenset(_restrict_triplets(R, bad)), method="build")
    return CompatReport(Verdict.COMPATIBLE, witness=RootedTree.from_nested(nested), method="build")


def theorem7_literal(R: Iterable[Triplet], max_labels: int = LITERAL_MAX_LABELS) -> bool:
    """Compatible iff [R, S] is disconnected for every S with |S| >= 3 (exponential sweep)."""
    R = list(R)
    labels = sort_labels(labels_of(R))
    if len(labels) > max_labels:
        raise CapExceeded(f"{len(labels)} labels exceeds subset-sweep cap {max_labels}")
    for k in range(3, len(labels) + 1):
        for S in itertools.combinations(labels, k):
            if rs_graph(R, S).is_connected():
                return False
    return True


def compat_triplets_brute(R: Iterable[Triplet], max_labels: int = DEFAULT_MAX_ROOTED_LABELS) -> CompatReport:
    """Search every rooted binary tree on L(R) for one displaying all of R."""
    R = list(R)
    if not R:
        raise PhyloError("empty triplet set")
    names = sort_labels(labels_of(R))
    if len(names) > max_labels:
        raise CapExceeded(f"{len(names)} labels exceeds brute-force cap {max_labels} "
                          f"({count_rooted_binary(len(names))} trees)")
    index = {x: i for i, x in enumerate(names)}
    encoded = [((1 << index[tr.cherry[0]]) | (1 << index[tr.cherry[1]]), 1 << index[tr.outgroup]) for tr in R]
    for clusters in rooted_cluster_systems(len(names)):
        if all(any(c & pair == pair and not c & out for c in clusters) for pair, out in encoded):
            return CompatReport(Verdict.COMPATIBLE,
                                witness=rooted_tree_from_clusters(clusters, names), method="brute")
    return CompatReport(Verdict.INCOMPATIBLE, certificate=frozenset(R), method="brute")


def compat_triplets(R: Iterable[Triplet], method: str = "build",
                    max_labels: int = DEFAULT_MAX_ROOTED_LABELS) -> CompatReport:
    R = list(R)
    check_distinct(R, "triplet")
    if method == "build":
        return build_compat(R)
    if method == "brute":
        return compat_triplets_brute(R, max_labels)
    if method == "literal":
        verdict = Verdict.COMPATIBLE if theorem7_literal(R) else Verdict.INCOMPATIBLE
        return CompatReport(verdict, method="literal")
    raise PhyloError(f"unknown method {method!r}")


def is_minimally_incompatible_triplets(R: Iterable[Triplet], method: str = "build") -> MinimalityReport:
    R = list(R)
    check_distinct(R, "triplet")
    return minimality(R, lambda sub: compat_triplets(sub, method))


def _cycle_edges(R: Sequence[Triplet]) -> set[frozenset]:
    """Edges of [R, L(R)] lying on a cycle; an edge contributed twice counts as a 2-cycle."""
    counts: dict[frozenset, int] = {}
    for tr in R:
        e = frozenset(tr.cherry)
        counts[e] = counts.get(e, 0) + 1
    vertices = labels_of(R)
    out = set()
    for e, k in counts.items():
        if k > 1:
            out.add(e)
            continue
        u, v = tuple(e)
        for comp in RSGraph(vertices, frozenset(counts) - {e}).components():
            if u in comp:
                if v in comp:
                    out.add(e)
                break
    return out


def extract_incompatible_subset(R: Iterable[Triplet]) -> list[Triplet]:
    """Shrink an incompatible set to a minimal incompatible subset.

    Repeatedly drops a triplet whose removal keeps the set incompatible,
    trying triplets whose cherry edge lies on a cycle of [R, L(R)] first.
    """
    R = list(R)
    check_distinct(R, "triplet")
    if build_compat(R).compatible:
        raise PhyloError("triplet set is compatible; nothing to extract")
    current = sorted(R, key=Triplet.sort_key)
    while True:
        on_cycle = _cycle_edges(current)
        order = sorted(current, key=lambda tr: (frozenset(tr.cherry) not in on_cycle, tr.sort_key()))
        for tr in order:
            rest = [x for x in current if x != tr]
            if rest and not build_compat(rest).compatible:
                current = rest
                break
        else:
            return current


def triplets_of_quartets(Q: Iterable[Quartet], ell: str) -> list[Triplet]:
    """ab|c ell -> ab|c for a label ell shared by every quartet."""
    out = []
    for q in Q:
        if ell in q.pair1:
            (other,) = set(q.pair1) - {ell}
            out.append(Triplet(q.pair2, other))
        elif ell in q.pair2:
            (other,) = set(q.pair2) - {ell}
            out.append(Triplet(q.pair1, other))
        else:
            raise LabelError(f"quartet {q} does not contain {ell!r}")
    return out


def quartets_of_triplets(R: Iterable[Triplet], ell: str) -> list[Quartet]:
    """ab|c -> ab|c ell for a label ell not used by R."""
    R = list(R)
    if ell in labels_of(R):
        raise LabelError(f"label {ell!r} already occurs in the triplets")
    return [Quartet(tr.cherry, (tr.outgroup, ell)) for tr in R]
