"""Leaf-labeled trees, constraint types, and the exhaustive tree enumerators.

Trees are immutable once built. Vertices are dense integer handles; leaves
carry string labels. Two small internal encodings are used throughout:

* *nested* form: a label string for a leaf, a tuple of nested forms for an
  internal vertex. It is what the Newick parser produces and what the
  serializer consumes.
* *cluster* form: a tuple of bitmasks over an ordered label list. For a rooted
  tree every mask is the leaf set below one edge (the root cluster included);
  for an unrooted tree rooted at label 0, every mask is the side of one edge
  away from label 0. The brute-force oracles work on this form directly.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence, Union

FORBIDDEN_LABEL_CHARS = frozenset("(){},;|:[]")

Nested = Union[str, tuple]


class PhyloError(ValueError):
    """Base class for all input and precondition errors raised by the package."""


class LabelError(PhyloError):
    pass


class NewickError(PhyloError):
    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class TreeError(PhyloError):
    pass


class CapExceeded(PhyloError):
    """Raised when an exhaustive oracle would exceed its label-universe cap."""


# --------------------------------------------------------------------------- #
# Labels
# --------------------------------------------------------------------------- #

def check_label(name: str) -> str:
    if not isinstance(name, str) or not name:
        raise LabelError(f"label must be a nonempty string, got {name!r}")
    for ch in name:
        if ch in FORBIDDEN_LABEL_CHARS or ch.isspace():
            raise LabelError(f"label {name!r} contains forbidden character {ch!r}")
    return name


_DIGITS = re.compile(r"(\d+)")


def label_key(name: str) -> tuple:
    """Natural sort key, so that ``a2`` sorts before ``a10``."""
    parts = _DIGITS.split(name)
    return tuple((0, int(p), p) if p.isdigit() else (1, 0, p) for p in parts if p)


def sort_labels(labels: Iterable[str]) -> list[str]:
    return sorted(labels, key=label_key)


# --------------------------------------------------------------------------- #
# Constraint types
# --------------------------------------------------------------------------- #

def _pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if label_key(a) <= label_key(b) else (b, a)


@dataclass(frozen=True)
class Quartet:
    """The unrooted quartet ``ab|cd``; stored canonically so ab|cd == ba|cd == cd|ab."""

    pair1: tuple[str, str]
    pair2: tuple[str, str]

    def __post_init__(self):
        p1 = _pair(*map(check_label, self.pair1))
        p2 = _pair(*map(check_label, self.pair2))
        if len({*p1, *p2}) != 4:
            raise LabelError(f"quartet needs four distinct labels: {p1}|{p2}")
        if tuple(map(label_key, p2)) < tuple(map(label_key, p1)):
            p1, p2 = p2, p1
        object.__setattr__(self, "pair1", p1)
        object.__setattr__(self, "pair2", p2)

    @classmethod
    def of(cls, a: str, b: str, c: str, d: str) -> "Quartet":
        return cls((a, b), (c, d))

    @property
    def labels(self) -> frozenset[str]:
        return frozenset(self.pair1 + self.pair2)

    def sort_key(self) -> tuple:
        return tuple(label_key(x) for x in self.pair1 + self.pair2)

    def __str__(self) -> str:
        return f"{self.pair1[0]} {self.pair1[1]} | {self.pair2[0]} {self.pair2[1]}"


@dataclass(frozen=True)
class Triplet:
    """The rooted triplet ``ab|c``: cherry {a, b}, outgroup c."""

    cherry: tuple[str, str]
    outgroup: str

    def __post_init__(self):
        cherry = _pair(*map(check_label, self.cherry))
        check_label(self.outgroup)
        if len({*cherry, self.outgroup}) != 3:
            raise LabelError(f"triplet needs three distinct labels: {cherry}|{self.outgroup}")
        object.__setattr__(self, "cherry", cherry)

    @classmethod
    def of(cls, a: str, b: str, c: str) -> "Triplet":
        return cls((a, b), c)

    @property
    def labels(self) -> frozenset[str]:
        return frozenset((*self.cherry, self.outgroup))

    def sort_key(self) -> tuple:
        return tuple(label_key(x) for x in (*self.cherry, self.outgroup))

    def __str__(self) -> str:
        return f"{self.cherry[0]} {self.cherry[1]} | {self.outgroup}"


@dataclass(frozen=True)
class Character:
    """A partition of a label set; each part is one state."""

    parts: frozenset

    def __init__(self, parts: Iterable[Iterable[str]]):
        frozen = []
        seen: set[str] = set()
        for part in parts:
            p = frozenset(check_label(x) for x in part)
            if not p:
                raise LabelError("character has an empty part")
            if p & seen:
                raise LabelError(f"character parts overlap on {sort_labels(p & seen)}")
            seen |= p
            frozen.append(p)
        if not frozen:
            raise LabelError("character has no parts")
        object.__setattr__(self, "parts", frozenset(frozen))

    @property
    def labels(self) -> frozenset[str]:
        return frozenset().union(*self.parts)

    @property
    def num_states(self) -> int:
        return len(self.parts)

    def ordered_parts(self) -> list[list[str]]:
        parts = [sort_labels(p) for p in self.parts]
        parts.sort(key=lambda p: (-len(p), label_key(p[0])))
        return parts

    def __str__(self) -> str:
        return "|".join(",".join(p) for p in self.ordered_parts())

    def __repr__(self) -> str:
        return f"Character({str(self)!r})"


def labels_of(items: Iterable) -> frozenset[str]:
    """Union of the label sets of quartets, triplets or characters."""
    out: set[str] = set()
    for item in items:
        out |= item.labels
    return frozenset(out)


# --------------------------------------------------------------------------- #
# Nested form helpers
# --------------------------------------------------------------------------- #

def _normalize(node: Nested) -> Nested:
    """Suppress unary vertices (degree two below the root, or a unary root)."""
    if isinstance(node, str):
        return node
    kids = [_normalize(k) for k in node]
    if len(kids) == 1:
        return kids[0]
    return tuple(kids)


def _nested_leaves(node: Nested) -> Iterator[str]:
    if isinstance(node, str):
        yield node
    else:
        for k in node:
            yield from _nested_leaves(k)


def _min_label(node: Nested) -> tuple:
    return min(label_key(x) for x in _nested_leaves(node))


def _sorted_nested(node: Nested) -> Nested:
    if isinstance(node, str):
        return node
    return tuple(sorted((_sorted_nested(k) for k in node), key=_min_label))


def _nested_text(node: Nested) -> str:
    if isinstance(node, str):
        return node
    return "(" + ",".join(_nested_text(k) for k in node) + ")"


# --------------------------------------------------------------------------- #
# Tree classes
# --------------------------------------------------------------------------- #

class _BaseTree:
    _adj: tuple[tuple[int, ...], ...]
    _label_of: dict[int, str]
    _vertex_of: dict[str, int]

    def _init_graph(self, edges: Iterable[tuple[int, int]], labels: Mapping[int, str]):
        edges = [tuple(e) for e in edges]
        vertices = {v for e in edges for v in e} | set(labels)
        if not vertices:
            raise TreeError("empty tree")
        if vertices != set(range(len(vertices))):
            remap = {v: i for i, v in enumerate(sorted(vertices))}
            edges = [(remap[u], remap[v]) for u, v in edges]
            labels = {remap[v]: name for v, name in labels.items()}
        n = len(vertices)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise TreeError("self-loop")
            adj[u].append(v)
            adj[v].append(u)
        if len(edges) != n - 1:
            raise TreeError(f"{n} vertices but {len(edges)} edges; not a tree")
        seen = {0}
        todo = [0]
        while todo:
            for w in adj[todo.pop()]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        if len(seen) != n:
            raise TreeError("tree is not connected")
        vertex_of = {}
        for v, name in labels.items():
            check_label(name)
            if name in vertex_of:
                raise TreeError(f"duplicate leaf label {name!r}")
            vertex_of[name] = v
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._label_of = dict(labels)
        self._vertex_of = vertex_of

    # read-only accessors
    @property
    def num_vertices(self) -> int:
        return len(self._adj)

    @property
    def vertices(self) -> range:
        return range(len(self._adj))

    @property
    def edges(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset((u, v)) for u, a in enumerate(self._adj) for v in a if u < v)

    @property
    def leaves(self) -> frozenset[str]:
        return frozenset(self._vertex_of)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def label_of(self, v: int) -> str | None:
        return self._label_of.get(v)

    def vertex_of(self, label: str) -> int:
        try:
            return self._vertex_of[label]
        except KeyError:
            raise LabelError(f"unknown label {label!r}") from None

    def _check_labels(self, labels: Iterable[str]) -> None:
        missing = set(labels) - set(self._vertex_of)
        if missing:
            raise LabelError(f"unknown labels {sort_labels(missing)}")

    def _nested_from(self, v: int, parent: int | None) -> Nested:
        if v in self._label_of:
            return self._label_of[v]
        return tuple(self._nested_from(w, v) for w in self._adj[v] if w != parent)

    def path(self, u: int, v: int) -> list[int]:
        """Vertices on the unique u-v path, endpoints included."""
        prev = {u: None}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if x == v:
                break
            for w in self._adj[x]:
                if w not in prev:
                    prev[w] = x
                    queue.append(w)
        out = [v]
        while out[-1] != u:
            out.append(prev[out[-1]])
        return out[::-1]

    def spanning_vertices(self, labels: Iterable[str]) -> frozenset[int]:
        """Vertex set of the minimal subtree connecting the given leaves."""
        vs = [self.vertex_of(x) for x in labels]
        if not vs:
            return frozenset()
        span = {vs[0]}
        for v in vs[1:]:
            span.update(self.path(vs[0], v))
        return frozenset(span)

    def __eq__(self, other):
        return type(self) is type(other) and canonical_form(self) == canonical_form(other)

    def __hash__(self):
        return hash(canonical_form(self))

    def __str__(self) -> str:
        return serialize_newick(self)


class UnrootedTree(_BaseTree):
    """Unrooted phylogenetic tree: no degree-2 vertices, leaves labeled bijectively.

    A two-leaf tree is the single edge between them.
    """

    def __init__(self, edges: Iterable[tuple[int, int]], labels: Mapping[int, str]):
        self._init_graph(edges, labels)
        for v, nbrs in enumerate(self._adj):
            deg = len(nbrs)
            if deg <= 1 and v not in self._label_of and self.num_vertices > 1:
                raise TreeError(f"unlabeled leaf vertex {v}")
            if deg > 1 and v in self._label_of:
                raise TreeError(f"label {self._label_of[v]!r} on internal vertex")
            if deg == 2:
                raise TreeError(f"vertex {v} has degree two")
        if len(self._label_of) < 2:
            raise TreeError("tree needs at least two leaves")

    @classmethod
    def from_nested(cls, nested: Nested) -> "UnrootedTree":
        """Build from a nested form read as a rooting; a binary root is suppressed."""
        nested = _normalize(nested)
        if isinstance(nested, str):
            raise TreeError("tree needs at least two leaves")
        edges: list[tuple[int, int]] = []
        labels: dict[int, str] = {}
        counter = iter(range(1 << 30))

        def build(node: Nested) -> int:
            v = next(counter)
            if isinstance(node, str):
                labels[v] = node
            else:
                for k in node:
                    edges.append((v, build(k)))
            return v

        if len(nested) == 2:
            left, right = build(nested[0]), build(nested[1])
            edges.append((left, right))
        else:
            build(nested)
        return cls(edges, labels)

    def internal_vertices(self) -> list[int]:
        return [v for v in self.vertices if v not in self._label_of]

    def is_binary(self) -> bool:
        return all(len(a) in (1, 3) for a in self._adj)

    @cached_property
    def splits(self) -> frozenset[frozenset[str]]:
        """Each edge as the leaf set on the side away from the smallest label."""
        anchor = self._vertex_of[sort_labels(self._vertex_of)[0]]
        out = []

        def walk(v: int, parent: int) -> frozenset[str]:
            below = {self._label_of[v]} if v in self._label_of else set()
            for w in self._adj[v]:
                if w != parent:
                    below |= walk(w, v)
            below = frozenset(below)
            out.append(below)
            return below

        walk(self._adj[anchor][0], anchor)
        return frozenset(out)

    def centroids(self) -> list[int]:
        n = self.num_vertices
        size = [1] * n
        parent = [-1] * n
        order = [0]
        for v in order:
            for w in self._adj[v]:
                if w != parent[v]:
                    parent[w] = v
                    order.append(w)
        for v in reversed(order[1:]):
            size[parent[v]] += size[v]
        best = []
        for v in range(n):
            heaviest = n - size[v]
            for w in self._adj[v]:
                if w != parent[v]:
                    heaviest = max(heaviest, size[w])
            if 2 * heaviest <= n:
                best.append(v)
        return best

    def to_nested(self) -> Nested:
        """Nested form rooted at the centroid (or the middle of the centroid edge)."""
        cents = self.centroids()
        if len(cents) == 1:
            return _sorted_nested(self._nested_from(cents[0], None))
        c1, c2 = cents
        return _sorted_nested((self._nested_from(c1, c2), self._nested_from(c2, c1)))

    def __repr__(self) -> str:
        return f"UnrootedTree({serialize_newick(self)!r})"


class RootedTree(_BaseTree):
    """Rooted phylogenetic tree: only the root may have degree two."""

    def __init__(self, edges: Iterable[tuple[int, int]], labels: Mapping[int, str], root: int):
        edges = list(edges)
        vertices = sorted({v for e in edges for v in e} | set(labels))
        if root not in vertices:
            raise TreeError("root is not a vertex")
        root = vertices.index(root)
        self._init_graph(edges, labels)
        self.root = root
        if len(self._label_of) < 2:
            raise TreeError("tree needs at least two leaves")
        parent = [-1] * self.num_vertices
        depth = [0] * self.num_vertices
        order = [root]
        for v in order:
            for w in self._adj[v]:
                if w != parent[v] and w != root:
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    order.append(w)
        self._parent = tuple(parent)
        self._depth = tuple(depth)
        for v in range(self.num_vertices):
            nkids = len(self.children(v))
            if v in self._label_of:
                if nkids:
                    raise TreeError(f"label {self._label_of[v]!r} on internal vertex")
            elif nkids == 0:
                raise TreeError(f"unlabeled leaf vertex {v}")
            elif nkids == 1:
                raise TreeError(f"vertex {v} has a single child")

    @classmethod
    def from_nested(cls, nested: Nested) -> "RootedTree":
        nested = _normalize(nested)
        if isinstance(nested, str):
            raise TreeError("tree needs at least two leaves")
        edges: list[tuple[int, int]] = []
        labels: dict[int, str] = {}
        counter = iter(range(1 << 30))

        def build(node: Nested) -> int:
            v = next(counter)
            if isinstance(node, str):
                labels[v] = node
            else:
                for k in node:
                    edges.append((v, build(k)))
            return v

        return cls(edges, labels, build(nested))

    def parent(self, v: int) -> int | None:
        p = self._parent[v]
        return None if p < 0 else p

    def children(self, v: int) -> tuple[int, ...]:
        return tuple(w for w in self._adj[v] if w != self._parent[v])

    def depth(self, v: int) -> int:
        return self._depth[v]

    def lca(self, *vs: int) -> int:
        it = iter(vs)
        x = next(it)
        for y in it:
            while self._depth[x] > self._depth[y]:
                x = self._parent[x]
            while self._depth[y] > self._depth[x]:
                y = self._parent[y]
            while x != y:
                x, y = self._parent[x], self._parent[y]
        return x

    def is_binary(self) -> bool:
        return all(len(self.children(v)) in (0, 2) for v in self.vertices)

    @cached_property
    def clusters(self) -> frozenset[frozenset[str]]:
        """Leaf sets below every vertex (root and leaves included)."""
        below: dict[int, frozenset[str]] = {}
        for v in sorted(self.vertices, key=lambda x: -self._depth[x]):
            if v in self._label_of:
                below[v] = frozenset((self._label_of[v],))
            else:
                below[v] = frozenset().union(*(below[w] for w in self.children(v)))
        return frozenset(below.values())

    def to_nested(self) -> Nested:
        return _sorted_nested(self._nested_from(self.root, None))

    def __repr__(self) -> str:
        return f"RootedTree({serialize_newick(self)!r})"


AnyTree = Union[UnrootedTree, RootedTree]


# --------------------------------------------------------------------------- #
# Newick
# --------------------------------------------------------------------------- #

class _NewickReader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.names: set[str] = set()

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise NewickError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def subtree(self) -> Nested:
        if self.peek() == "(":
            self.pos += 1
            kids = [self.subtree()]
            while self.peek() == ",":
                self.pos += 1
                kids.append(self.subtree())
            self.expect(")")
            if self.peek() not in ",);":
                raise NewickError("internal node names and branch lengths are not supported", self.pos)
            return tuple(kids)
        return self.name()

    def name(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch in "(),;" or ch.isspace():
                break
            if ch in FORBIDDEN_LABEL_CHARS:
                raise NewickError(f"unexpected character {ch!r}", self.pos)
            self.pos += 1
        name = self.text[start:self.pos]
        if not name:
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise NewickError(f"expected a leaf name, found {found!r}", start)
        if name in self.names:
            raise NewickError(f"duplicate leaf name {name!r}", start)
        self.names.add(name)
        return name


def parse_nested(text: str) -> Nested:
    reader = _NewickReader(text)
    if reader.peek() in ("", ";"):
        raise NewickError("empty tree", reader.pos)
    nested = reader.subtree()
    reader.expect(";")
    if reader.peek():
        raise NewickError("trailing text after ';'", reader.pos)
    return nested


def parse_newick(text: str) -> RootedTree:
    """Parse a topology-only Newick string; redundant parentheses are suppressed."""
    nested = _normalize(parse_nested(text))
    if isinstance(nested, str):
        raise NewickError("tree has a single leaf")
    return RootedTree.from_nested(nested)


def serialize_newick(t: AnyTree) -> str:
    """Deterministic Newick text; children ordered by their smallest label."""
    return _nested_text(t.to_nested()) + ";"


def canonical_form(t: AnyTree) -> bytes:
    """Byte string equal for two trees iff they are label-isomorphic (rooted: root-respecting)."""
    tag = b"R" if isinstance(t, RootedTree) else b"U"
    return tag + serialize_newick(t).encode()


def unroot(t: RootedTree) -> UnrootedTree:
    if len(t.leaves) < 3:
        raise TreeError("unrooting needs at least three leaves")
    return UnrootedTree.from_nested(t._nested_from(t.root, None))


def as_rooted(t: UnrootedTree) -> RootedTree:
    """Root at the canonical vertex used for serialization."""
    return RootedTree.from_nested(t.to_nested())


# --------------------------------------------------------------------------- #
# Restriction and display
# --------------------------------------------------------------------------- #

def _restricted_nested(t: _BaseTree, keep: frozenset[str], v: int, parent: int | None) -> Nested | None:
    if v in t._label_of:
        return t._label_of[v] if t._label_of[v] in keep else None
    kids = [r for w in t._adj[v] if w != parent
            for r in (_restricted_nested(t, keep, w, v),) if r is not None]
    if not kids:
        return None
    if len(kids) == 1:
        return kids[0]
    return tuple(kids)


def restrict(t: UnrootedTree, labels: Iterable[str]) -> UnrootedTree:
    """The restriction T|L: minimal connecting subtree, degree-2 vertices suppressed."""
    keep = frozenset(labels)
    t._check_labels(keep)
    if len(keep) < 2:
        raise TreeError("restriction needs at least two labels")
    anchor_label = sort_labels(keep)[0]
    anchor = t.vertex_of(anchor_label)
    rest = _restricted_nested(t, keep, t.neighbors(anchor)[0], anchor)
    if isinstance(rest, str):
        return UnrootedTree([(0, 1)], {0: anchor_label, 1: rest})
    return UnrootedTree.from_nested((anchor_label, *rest))


def restrict_rooted(t: RootedTree, labels: Iterable[str]) -> RootedTree:
    keep = frozenset(labels)
    t._check_labels(keep)
    if len(keep) < 2:
        raise TreeError("restriction needs at least two labels")
    return RootedTree.from_nested(_restricted_nested(t, keep, t.root, None))


def displays_quartet(t: UnrootedTree, q: Quartet) -> bool:
    """True iff the a-b path and the c-d path of ``q = ab|cd`` are vertex-disjoint in t."""
    t._check_labels(q.labels)
    (a, b), (c, d) = q.pair1, q.pair2
    p1 = t.path(t.vertex_of(a), t.vertex_of(b))
    p2 = t.path(t.vertex_of(c), t.vertex_of(d))
    return not set(p1) & set(p2)


def displays_triplet(t: RootedTree, tr: Triplet) -> bool:
    t._check_labels(tr.labels)
    a, b = (t.vertex_of(x) for x in tr.cherry)
    c = t.vertex_of(tr.outgroup)
    cherry = t.lca(a, b)
    top = t.lca(cherry, c)
    return cherry != top


def is_convex(t: UnrootedTree, chi: Character) -> bool:
    """True iff the spanning subtrees of distinct states are pairwise vertex-disjoint."""
    t._check_labels(chi.labels)
    spans = [t.spanning_vertices(p) for p in chi.parts]
    used: set[int] = set()
    for span in spans:
        if used & span:
            return False
        used |= span
    return True


# --------------------------------------------------------------------------- #
# Enumeration over cluster form
# --------------------------------------------------------------------------- #

def _double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def count_unrooted_binary(n: int) -> int:
    return 1 if n == 3 else _double_factorial(2 * n - 5)


def count_rooted_binary(n: int) -> int:
    return _double_factorial(2 * n - 3)


def _insertions(start: tuple[int, ...], first: int, n: int) -> Iterator[tuple[int, ...]]:
    """Insert leaves first..n-1 in turn into every edge; each edge is one mask."""

    def grow(masks: tuple[int, ...], k: int) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield masks
            return
        bit = 1 << k
        for s in masks:
            grown = tuple(x | bit if x & s == s else x for x in masks) + (s, bit)
            yield from grow(grown, k + 1)

    return grow(start, first)


def unrooted_cluster_systems(n: int) -> Iterator[tuple[int, ...]]:
    """Every binary unrooted tree on leaves 0..n-1, as edge masks away from leaf 0."""
    if n < 3:
        raise TreeError("unrooted binary trees need at least three labels")
    return _insertions((0b010, 0b100, 0b110), 3, n)


def rooted_cluster_systems(n: int) -> Iterator[tuple[int, ...]]:
    """Every binary rooted tree on leaves 0..n-1, as the clusters of its vertices."""
    if n < 2:
        raise TreeError("rooted binary trees need at least two labels")
    return _insertions((0b01, 0b10, 0b11), 2, n)


def _nested_from_clusters(clusters: Sequence[int], names: Sequence[str], top: int) -> Nested:
    # clusters form a hierarchy; attach each to the smallest strict superset
    ordered = sorted(set(clusters) | {top}, key=lambda m: bin(m).count("1"))
    children: dict[int, list[int]] = {m: [] for m in ordered}
    for i, m in enumerate(ordered):
        if m == top:
            continue
        for sup in ordered[i + 1:]:
            if sup != m and sup & m == m:
                children[sup].append(m)
                break
    covered: dict[int, int] = {m: 0 for m in ordered}
    for m, kids in children.items():
        for k in kids:
            covered[m] |= k

    def build(m: int) -> Nested:
        if m & (m - 1) == 0 and not children[m]:
            return names[m.bit_length() - 1]
        kids = [build(k) for k in children[m]]
        rest = m & ~covered[m]
        i = 0
        while rest:
            if rest & 1:
                kids.append(names[i])
            rest >>= 1
            i += 1
        return tuple(kids)

    return build(top)


def rooted_tree_from_clusters(clusters: Sequence[int], names: Sequence[str]) -> RootedTree:
    full = (1 << len(names)) - 1
    return RootedTree.from_nested(_nested_from_clusters(clusters, names, full))


def unrooted_tree_from_clusters(masks: Sequence[int], names: Sequence[str]) -> UnrootedTree:
    full = (1 << len(names)) - 1
    rest = _nested_from_clusters([m for m in masks if m != full & ~1], names, full & ~1)
    if isinstance(rest, str):
        return UnrootedTree([(0, 1)], {0: names[0], 1: rest})
    return UnrootedTree.from_nested((names[0], *rest))


def enumerate_unrooted_binary(labels: Iterable[str]) -> Iterator[UnrootedTree]:
    """Every unrooted binary tree on the labels exactly once, in a fixed order."""
    names = sort_labels(set(labels))
    for masks in unrooted_cluster_systems(len(names)):
        yield unrooted_tree_from_clusters(masks, names)


def enumerate_rooted_binary(labels: Iterable[str]) -> Iterator[RootedTree]:
    names = sort_labels(set(labels))
    for clusters in rooted_cluster_systems(len(names)):
        yield rooted_tree_from_clusters(clusters, names)
