"""Generators for the extremal quartet, character and triplet families."""

from __future__ import annotations

from .trees import PhyloError, Quartet, Triplet, UnrootedTree

FRESH_LABEL = "ell"


def a(i: int) -> str:
    return f"a{i}"


def b(j: int) -> str:
    return f"b{j}"


def st_labels(s: int, t: int) -> list[str]:
    _check_st(s, t)
    return [a(i) for i in range(1, s + 1)] + [b(j) for j in range(1, t + 1)]


def _check_st(s: int, t: int) -> None:
    if s < 2 or t < 2:
        raise PhyloError(f"need s, t >= 2, got s={s}, t={t}")


def q0(s: int, t: int) -> Quartet:
    return Quartet.of(a(1), b(1), a(s), b(t))


def qij(i: int, j: int) -> Quartet:
    return Quartet.of(a(i), a(i + 1), b(j), b(j + 1))


def gen_Qst(s: int, t: int) -> list[Quartet]:
    """q0 = a1 b1 | as bt followed by every q_ij = ai ai+1 | bj bj+1 (row-major)."""
    _check_st(s, t)
    return [q0(s, t)] + [qij(i, j) for i in range(1, s) for j in range(1, t)]


def g_map(s: int, t: int) -> dict[str, str]:
    """Label bijection L_{s,t} -> L_{t,s} swapping the a- and b-labels index for index."""
    _check_st(s, t)
    out = {a(i): b(i) for i in range(1, s + 1)}
    out.update({b(j): a(j) for j in range(1, t + 1)})
    return out


def relabel_quartet(q: Quartet, mapping: dict[str, str]) -> Quartet:
    (w, x), (y, z) = q.pair1, q.pair2
    return Quartet.of(mapping[w], mapping[x], mapping[y], mapping[z])


def witness_tree_missing_q0(s: int, t: int) -> UnrootedTree:
    """All a-labels on one side of a single internal edge, all b-labels on the other."""
    _check_st(s, t)
    return UnrootedTree.from_nested((
        tuple(a(i) for i in range(1, s + 1)),
        tuple(b(j) for j in range(1, t + 1)),
    ))


def witness_tree_missing_qxy(s: int, t: int, x: int, y: int) -> UnrootedTree:
    """Spine a_low - low - high - a_high with b_low on low and b_high on high.

    a_i hangs off a_low when i <= x, else a_high; b_j off b_low when j <= y,
    else b_high. Hubs left with a single leaf are suppressed.
    """
    _check_st(s, t)
    if not (1 <= x < s and 1 <= y < t):
        raise PhyloError(f"need 1 <= x < {s} and 1 <= y < {t}, got x={x}, y={y}")
    a_low = tuple(a(i) for i in range(1, x + 1))
    a_high = tuple(a(i) for i in range(x + 1, s + 1))
    b_low = tuple(b(j) for j in range(1, y + 1))
    b_high = tuple(b(j) for j in range(y + 1, t + 1))
    return UnrootedTree.from_nested((a_low, b_low, (a_high, b_high)))


def gen_theorem3_set(n: int) -> list[Quartet]:
    if n < 4:
        raise PhyloError(f"need n >= 4, got {n}")
    return gen_Qst(n // 2, (n + 1) // 2)


def theorem3_size(n: int) -> int:
    return ((n - 2) // 2) * ((n - 1) // 2) + 1


def theorem5_size(r: int) -> int:
    return (r // 2) * ((r + 1) // 2) + 1


def gen_theorem5_set(r: int):
    """C_Q for Q = Q_{floor((r+2)/2), ceil((r+2)/2)}: r-state characters."""
    from .characters import c_of_q

    if r < 2:
        raise PhyloError(f"need r >= 2, got {r}")
    return c_of_q(gen_theorem3_set(r + 2))


def gen_Rr(r: int) -> list[Triplet]:
    """{a br | b1} plus a bi | bi+1 for i < r, over labels a, b1..br."""
    if r < 2:
        raise PhyloError(f"need r >= 2, got {r}")
    return [Triplet.of("a", b(r), b(1))] + [Triplet.of("a", b(i), b(i + 1)) for i in range(1, r)]


def gen_corollary3_triplets(n: int, ell: str = "a2") -> list[Triplet]:
    """n - 1 triplets over n labels, incompatible with every proper subset compatible.

    Built from Q_{2, n-1}, whose quartets all contain a1 and a2, by dropping
    the shared label ``ell`` (either ``a2`` or ``a1``).
    """
    from .triplets import triplets_of_quartets

    if n < 3:
        raise PhyloError(f"need n >= 3, got {n}")
    if ell not in (a(1), a(2)):
        raise PhyloError(f"ell must be a1 or a2, got {ell!r}")
    return triplets_of_quartets(gen_Qst(2, n - 1), ell)
