import itertools
from functools import lru_cache

import pytest

from phylocompat.trees import (
    Quartet,
    Triplet,
    canonical_form,
    parse_newick,
    sort_labels,
    unroot,
    unrooted_cluster_systems,
    unrooted_tree_from_clusters,
)

FIG1_NEWICK = "((a,b),(c,d),(e,f));"
FIG4_NEWICK = "((a,b),((c,d),(e,f)));"

# acceptance results collected for the terminal summary
ACCEPTANCE_LINES: list[str] = []


def Q(text: str) -> Quartet:
    """'ab|cd' shorthand for single-character labels."""
    left, right = text.split("|")
    return Quartet.of(left[0], left[1], right[0], right[1])


def T(text: str) -> Triplet:
    left, right = text.split("|")
    return Triplet.of(left[0], left[1], right)


@lru_cache(maxsize=None)
def all_unrooted_trees(n: int):
    """Every unrooted tree (binary or not) on labels l1..ln, each exactly once.

    Built by contracting every subset of internal edges of every binary tree.
    """
    names = [f"l{i}" for i in range(1, n + 1)]
    full = (1 << n) - 1
    seen = {}
    for masks in unrooted_cluster_systems(n):
        internal = [m for m in masks if m & (m - 1) and m != full & ~1]
        trivial = [m for m in masks if m not in internal]
        for k in range(len(internal) + 1):
            for keep in itertools.combinations(internal, k):
                tree = unrooted_tree_from_clusters(trivial + list(keep), names)
                seen.setdefault(canonical_form(tree), tree)
    return tuple(seen.values())


@pytest.fixture
def fig1_tree():
    return unroot(parse_newick(FIG1_NEWICK))


@pytest.fixture
def fig4_tree():
    return parse_newick(FIG4_NEWICK)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


__all__ = ["Q", "T", "all_unrooted_trees", "sort_labels"]
