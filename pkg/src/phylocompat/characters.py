"""Multi-state characters and the quartet-to-character correspondence."""

from __future__ import annotations

from typing import Iterable, Sequence

from .quartets import (
    DEFAULT_MAX_LABELS,
    CompatReport,
    MinimalityReport,
    Verdict,
    check_distinct,
    minimality,
)
from .trees import (
    CapExceeded,
    Character,
    LabelError,
    PhyloError,
    Quartet,
    count_unrooted_binary,
    labels_of,
    sort_labels,
    unrooted_cluster_systems,
    unrooted_tree_from_clusters,
)


def chi_of_quartet(q: Quartet, labels: Iterable[str]) -> Character:
    """Pairs of q as two states, every other label of ``labels`` a singleton state."""
    labels = frozenset(labels)
    if not q.labels <= labels:
        raise LabelError(f"quartet {q} has labels outside the universe")
    return Character([q.pair1, q.pair2, *([x] for x in labels - q.labels)])


def c_of_q(Q: Iterable[Quartet]) -> list[Character]:
    """One character per quartet, all over the common universe L(Q); order follows Q."""
    Q = list(Q)
    if not Q:
        raise PhyloError("empty quartet set")
    check_distinct(Q)
    universe = labels_of(Q)
    return [chi_of_quartet(q, universe) for q in Q]


def max_states(C: Iterable[Character]) -> int:
    C = list(C)
    if not C:
        raise PhyloError("empty character set")
    return max(chi.num_states for chi in C)


def common_universe(C: Sequence[Character]) -> frozenset[str]:
    if not C:
        raise PhyloError("empty character set")
    universe = C[0].labels
    for chi in C[1:]:
        if chi.labels != universe:
            raise PhyloError(f"characters {C[0]} and {chi} are over different label sets")
    return universe


def convex_on_masks(masks: Sequence[int], part_masks: Sequence[int]) -> bool:
    """Every pair of non-singleton states is separated by some edge.

    Two subtrees of a tree are vertex-disjoint exactly when an edge separates
    their leaves; singleton states are single leaves and never collide.
    """
    big = [p for p in part_masks if p & (p - 1)]
    for i in range(len(big)):
        for j in range(i + 1, len(big)):
            left, right = big[i], big[j]
            if not any((m & left == left and not m & right) or (m & right == right and not m & left)
                       for m in masks):
                return False
    return True


def compat_characters_brute(C: Iterable[Character], max_labels: int = DEFAULT_MAX_LABELS) -> CompatReport:
    """Search binary trees on the shared universe for one on which every character is convex."""
    C = list(C)
    names = sort_labels(common_universe(C))
    if len(names) > max_labels:
        raise CapExceeded(f"{len(names)} labels exceeds brute-force cap {max_labels} "
                          f"({count_unrooted_binary(len(names))} trees)")
    if len(names) < 3:
        # every partition of at most two labels is convex on the single edge
        from .trees import UnrootedTree
        witness = UnrootedTree([(0, 1)], dict(enumerate(names))) if len(names) == 2 else None
        return CompatReport(Verdict.COMPATIBLE, witness=witness, method="brute")
    index = {x: i for i, x in enumerate(names)}
    encoded = [[sum(1 << index[x] for x in part) for part in chi.parts] for chi in C]
    for masks in unrooted_cluster_systems(len(names)):
        if all(convex_on_masks(masks, parts) for parts in encoded):
            return CompatReport(Verdict.COMPATIBLE,
                                witness=unrooted_tree_from_clusters(masks, names), method="brute")
    return CompatReport(Verdict.INCOMPATIBLE, certificate=frozenset(C), method="brute")


def is_minimally_incompatible_characters(C: Iterable[Character],
                                         max_labels: int = DEFAULT_MAX_LABELS) -> MinimalityReport:
    C = list(C)
    check_distinct(C, "character")
    common_universe(C)
    return minimality(C, lambda sub: compat_characters_brute(sub, max_labels))
