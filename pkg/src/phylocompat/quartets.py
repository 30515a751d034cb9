"""Quartet-set compatibility: exhaustive witness search and quartet-graph unification."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .trees import (
    CapExceeded,
    PhyloError,
    Quartet,
    count_unrooted_binary,
    labels_of,
    label_key,
    sort_labels,
    unrooted_cluster_systems,
    unrooted_tree_from_clusters,
)

DEFAULT_MAX_LABELS = 9


class Verdict(enum.Enum):
    COMPATIBLE = "compatible"
    INCOMPATIBLE = "incompatible"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CompatReport:
    """Verdict plus whatever certificate the deciding method produced."""

    verdict: Verdict
    witness: object = None
    certificate: frozenset | None = None
    unification: tuple | None = None
    method: str = ""

    @property
    def compatible(self) -> bool:
        return self.verdict is Verdict.COMPATIBLE


@dataclass(frozen=True)
class MinimalityReport:
    """Outcome of checking that a set is incompatible while each one-element removal is compatible.

    ``witnesses`` maps each removed element to the report for the remaining set.
    ``blocking`` lists elements whose removal still leaves an incompatible set.
    """

    minimal: bool
    incompatible: bool
    size: int
    witnesses: Mapping = field(default_factory=dict)
    blocking: tuple = ()

    def __bool__(self) -> bool:
        return self.minimal


def check_distinct(items: Sequence, kind: str = "quartet") -> None:
    seen = set()
    for item in items:
        if item in seen:
            raise PhyloError(f"duplicate {kind} {item}")
        seen.add(item)


# --------------------------------------------------------------------------- #
# Brute force
# --------------------------------------------------------------------------- #

def _quartet_masks(Q: Iterable[Quartet], index: Mapping[str, int]) -> list[tuple[int, int]]:
    return [((1 << index[a]) | (1 << index[b]), (1 << index[c]) | (1 << index[d]))
            for (a, b), (c, d) in ((q.pair1, q.pair2) for q in Q)]


def split_displays(masks: Sequence[int], left: int, right: int) -> bool:
    """Some edge mask separates ``left`` from ``right`` (either side)."""
    for m in masks:
        if m & left == left and not m & right:
            return True
        if m & right == right and not m & left:
            return True
    return False


def compat_quartets_brute(Q: Iterable[Quartet], max_labels: int = DEFAULT_MAX_LABELS) -> CompatReport:
    """Search every binary tree on L(Q) for one displaying all of Q.

    The first witness in enumeration order is returned, so the result is
    deterministic.
    """
    Q = list(Q)
    if not Q:
        raise PhyloError("empty quartet set")
    names = sort_labels(labels_of(Q))
    if len(names) > max_labels:
        raise CapExceeded(f"{len(names)} labels exceeds brute-force cap {max_labels} "
                          f"({count_unrooted_binary(len(names))} trees)")
    index = {x: i for i, x in enumerate(names)}
    qmasks = _quartet_masks(Q, index)
    for masks in unrooted_cluster_systems(len(names)):
        if all(split_displays(masks, l, r) for l, r in qmasks):
            return CompatReport(Verdict.COMPATIBLE,
                                witness=unrooted_tree_from_clusters(masks, names), method="brute")
    return CompatReport(Verdict.INCOMPATIBLE, certificate=frozenset(Q), method="brute")


# --------------------------------------------------------------------------- #
# Quartet graphs
# --------------------------------------------------------------------------- #

Edge = frozenset  # of two class handles


@dataclass(frozen=True)
class QuartetGraph:
    """Edge-colored graph over label classes.

    ``classes`` maps a vertex handle to the label set it stands for.
    ``edges`` maps a color (index into ``origin``) to its two edges; colors
    that lost their edges are absent.
    """

    classes: Mapping[int, frozenset]
    edges: Mapping[int, tuple]
    origin: tuple = ()

    def __post_init__(self):
        for color, pair in self.edges.items():
            if len(pair) != 2:
                raise PhyloError(f"color {color} has {len(pair)} edges; expected 2")

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.classes)

    def num_edges(self) -> int:
        return 2 * len(self.edges)

    def is_edgeless(self) -> bool:
        return not self.edges

    def class_name(self, v: int) -> str:
        return ",".join(sort_labels(self.classes[v]))

    def color_name(self, color: int) -> str:
        return f"q{color + 1}"

    def active_vertices(self) -> list[int]:
        return sorted({v for pair in self.edges.values() for e in pair for v in e})

    def state_key(self) -> frozenset:
        """Residual structure: the quartets of the graph over label classes, colors forgotten."""
        return frozenset(
            frozenset(frozenset(self.classes[v] for v in e) for e in pair)
            for pair in self.edges.values()
        )


def quartet_graph(Q: Iterable[Quartet]) -> QuartetGraph:
    Q = list(Q)
    if not Q:
        raise PhyloError("empty quartet set")
    check_distinct(Q)
    names = sort_labels(labels_of(Q))
    handle = {x: i for i, x in enumerate(names)}
    edges = {
        c: (Edge((handle[q.pair1[0]], handle[q.pair1[1]])), Edge((handle[q.pair2[0]], handle[q.pair2[1]])))
        for c, q in enumerate(Q)
    }
    return QuartetGraph({i: frozenset((x,)) for i, x in enumerate(names)}, edges, tuple(Q))


def _touching(g: QuartetGraph, U: frozenset[int]) -> dict[int, list]:
    out: dict[int, list] = {}
    for color, pair in g.edges.items():
        hits = [e for e in pair if e & U]
        if hits:
            out[color] = hits
    return out


def admissible(g: QuartetGraph, U: Iterable[int]) -> bool:
    """At most one edge of each color touches U."""
    U = frozenset(U)
    unknown = U - g.vertices
    if unknown:
        raise PhyloError(f"unknown class handles {sorted(unknown)}")
    if len(U) < 2:
        raise PhyloError("unification needs at least two vertices")
    return all(len(hits) <= 1 for hits in _touching(g, U).values())


@dataclass(frozen=True)
class UnificationStep:
    unified: frozenset
    new_class: int


def unify(g: QuartetGraph, U: Iterable[int], new_class: int | None = None) -> QuartetGraph:
    U = frozenset(U)
    if not admissible(g, U):
        raise PhyloError(f"vertex set {sorted(U)} is not admissible")
    u = max(g.classes) + 1 if new_class is None else new_class
    if u in g.classes and u not in U:
        raise PhyloError(f"class handle {u} already in use")
    classes = {v: ls for v, ls in g.classes.items() if v not in U}
    classes[u] = frozenset().union(*(g.classes[v] for v in U))
    edges = {}
    for color, pair in g.edges.items():
        new_pair = []
        for e in pair:
            inside = e & U
            if len(inside) == 2:
                break  # an edge inside U deletes its whole color
            new_pair.append(Edge((u, *(e - U))) if inside else e)
        else:
            edges[color] = tuple(new_pair)
    return QuartetGraph(classes, edges, g.origin)


def apply_sequence(g: QuartetGraph, steps: Iterable[Iterable[int]]) -> list[QuartetGraph]:
    """Replay unifications; returns every intermediate graph, starting with g."""
    out = [g]
    for U in steps:
        out.append(unify(out[-1], U))
    return out


def quartet_set_of_graph(g: QuartetGraph) -> frozenset[tuple]:
    """One quartet per color, over class handles: ((a, b), (c, d)) canonically ordered."""
    out = set()
    for color, pair in g.edges.items():
        if len(pair) != 2:
            raise PhyloError(f"color {color} has a dangling edge")
        p1, p2 = (tuple(sorted(e)) for e in pair)
        out.add((min(p1, p2), max(p1, p2)))
    return frozenset(out)


def quartets_over_labels(g: QuartetGraph) -> frozenset[Quartet]:
    """Read Q_G back as label quartets; only meaningful while every class is a singleton."""
    def name(v):
        (x,) = g.classes[v]
        return x
    return frozenset(Quartet((name(a), name(b)), (name(c), name(d)))
                     for (a, b), (c, d) in quartet_set_of_graph(g))


def admissible_sets(g: QuartetGraph) -> list[frozenset[int]]:
    """All admissible vertex sets over edge-carrying vertices, smallest first."""
    active = g.active_vertices()
    incident: dict[int, list[tuple[int, frozenset]]] = {v: [] for v in active}
    for color, pair in g.edges.items():
        for e in pair:
            for v in e:
                incident[v].append((color, e))
    found: list[frozenset[int]] = []

    def grow(start: int, chosen: list[int], used: dict[int, frozenset]):
        for i in range(start, len(active)):
            v = active[i]
            new_used = dict(used)
            ok = True
            for color, e in incident[v]:
                prev = new_used.get(color)
                if prev is None:
                    new_used[color] = e
                elif prev != e:
                    ok = False
                    break
            if not ok:
                continue
            chosen.append(v)
            if len(chosen) >= 2:
                found.append(frozenset(chosen))
            grow(i + 1, chosen, new_used)
            chosen.pop()

    grow(0, [], {})
    found.sort(key=lambda s: (len(s), sorted(s)))
    return found


def find_complete_unification(g: QuartetGraph) -> list[UnificationStep] | None:
    """Depth-first search for a unification sequence ending in an edgeless graph.

    Failed residual states are memoized by :meth:`QuartetGraph.state_key`.
    Returns None when no complete sequence exists.
    """
    failed: set[frozenset] = set()
    steps: list[UnificationStep] = []

    def search(h: QuartetGraph) -> bool:
        if h.is_edgeless():
            return True
        key = h.state_key()
        if key in failed:
            return False
        for U in admissible_sets(h):
            nxt = unify(h, U)
            steps.append(UnificationStep(U, max(nxt.classes)))
            if search(nxt):
                return True
            steps.pop()
        failed.add(key)
        return False

    return list(steps) if search(g) else None


def compat_quartets_unification(Q: Iterable[Quartet]) -> CompatReport:
    Q = list(Q)
    seq = find_complete_unification(quartet_graph(Q))
    if seq is None:
        return CompatReport(Verdict.INCOMPATIBLE, certificate=frozenset(Q), method="unification")
    return CompatReport(Verdict.COMPATIBLE, unification=tuple(seq), method="unification")


def compat_quartets(Q: Iterable[Quartet], method: str = "brute",
                    max_labels: int = DEFAULT_MAX_LABELS) -> CompatReport:
    Q = list(Q)
    check_distinct(Q)
    if method == "brute":
        return compat_quartets_brute(Q, max_labels=max_labels)
    if method == "unification":
        return compat_quartets_unification(Q)
    raise PhyloError(f"unknown method {method!r}")


def minimality(items: Sequence, decide) -> MinimalityReport:
    """Generic minimal-incompatibility check; ``decide`` maps a nonempty list to a CompatReport.

    Dropping single elements suffices: compatibility is inherited by subsets.
    """
    items = list(items)
    if not decide(items).compatible:
        witnesses = {}
        blocking = []
        for i, item in enumerate(items):
            rest = items[:i] + items[i + 1:]
            if not rest:
                continue
            rep = decide(rest)
            if rep.compatible:
                witnesses[item] = rep
            else:
                blocking.append(item)
        return MinimalityReport(not blocking, True, len(items), witnesses, tuple(blocking))
    return MinimalityReport(False, False, len(items))


def is_minimally_incompatible_quartets(Q: Iterable[Quartet], method: str = "brute",
                                       max_labels: int = DEFAULT_MAX_LABELS) -> MinimalityReport:
    Q = list(Q)
    check_distinct(Q)
    return minimality(Q, lambda sub: compat_quartets(sub, method, max_labels))


# --------------------------------------------------------------------------- #
# DOT export
# --------------------------------------------------------------------------- #

def _dot_id(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: QuartetGraph, name: str = "G") -> str:
    """Graphviz text; vertices named by their sorted label set, one line per colored edge."""
    lines = [f"graph {name} {{"]
    order = sorted(g.classes, key=lambda v: [label_key(x) for x in sort_labels(g.classes[v])])
    for v in order:
        lines.append(f"  {_dot_id(g.class_name(v))};")
    rows = []
    for color in sorted(g.edges):
        for e in g.edges[color]:
            a, b = sorted((g.class_name(v) for v in e), key=label_key)
            rows.append((color, label_key(a), label_key(b),
                         f"  {_dot_id(a)} -- {_dot_id(b)} [label={_dot_id(g.color_name(color))}];"))
    rows.sort(key=lambda r: r[:3])
    lines.extend(r[3] for r in rows)
    lines.append("}")
    return "\n".join(lines) + "\n"

