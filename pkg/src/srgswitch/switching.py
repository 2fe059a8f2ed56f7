"""Godsil-McKay and Wang-Qiu-Hu switching.

GM switching here always uses a 4-set ``C``: every outside vertex sees 0, 2
or 4 vertices of ``C`` and the ones seeing exactly 2 get their adjacency to
``C`` complemented.  WQH switching uses two disjoint ``ell``-sets
``C1, C2``; an outside vertex whose neighbourhood in ``C1 | C2`` is exactly
``C1`` or exactly ``C2`` swaps it for the other block.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import _kernels
from .graph import Graph, bits, mask_of


class InvalidPartitionError(ValueError):
    """The partition does not satisfy the switching conditions for this graph."""


class NotApplicableError(ValueError):
    pass


@dataclass(frozen=True)
class Rejection:
    condition: str
    reason: str

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class GmPartition:
    C: tuple[int, int, int, int]
    half_set: tuple[int, ...]

    @property
    def kind(self) -> str:
        return "gm4"

    def vertices(self) -> tuple[int, ...]:
        return self.C


@dataclass(frozen=True)
class WqhPartition:
    ell: int
    C1: tuple[int, ...]
    C2: tuple[int, ...]
    switch_set: tuple[int, ...]

    @property
    def kind(self) -> str:
        return f"wqh{self.ell}"

    def vertices(self) -> tuple[int, ...]:
        return self.C1 + self.C2


# ----------------------------------------------------------------------
# GM
# ----------------------------------------------------------------------
def classify_gm(g: Graph, C: Sequence[int]) -> GmPartition | Rejection:
    C = tuple(sorted(C))
    if len(C) != 4 or len(set(C)) != 4:
        raise ValueError(f"GM switching needs 4 distinct vertices, got {C}")
    if not all(0 <= c < g.n for c in C):
        raise ValueError(f"{C} is not a subset of the vertex set")
    rows = g.rows
    cmask = mask_of(C)
    # (A) only touches the 12 entries inside C
    degs = {(rows[c] & cmask).bit_count() for c in C}
    if len(degs) != 1:
        return Rejection("A", f"induced subgraph on {C} is not regular")
    half = []
    for x in range(g.n):
        if cmask >> x & 1:
            continue
        t = (rows[x] & cmask).bit_count()
        if t == 2:
            half.append(x)
        elif t not in (0, 4):
            return Rejection("B", f"vertex {x} has {t} neighbours in {C}")
    if not half:
        return Rejection("C", f"no outside vertex has exactly 2 neighbours in {C}")
    return GmPartition(C, tuple(half))


def _gm_from_set(g: Graph, C: tuple[int, int, int, int]) -> GmPartition:
    cmask = mask_of(C)
    half = tuple(x for x in bits(((1 << g.n) - 1) & ~cmask) if (g.rows[x] & cmask).bit_count() == 2)
    return GmPartition(C, half)


def enumerate_gm_partitions(g: Graph, *, first: Sequence[int] | None = None) -> Iterator[GmPartition]:
    """Every valid GM 4-set, lexicographically; ``first`` restricts the smallest vertex."""
    for c1 in (range(g.n) if first is None else first):
        for C in _kernels.gm_block(g, c1):
            yield _gm_from_set(g, tuple(C))


def apply_gm(g: Graph, p: GmPartition) -> Graph:
    chk = classify_gm(g, p.C)
    if not chk or chk.half_set != p.half_set:
        raise InvalidPartitionError(f"stale GM partition {p.C}: {getattr(chk, 'reason', 'half set differs')}")
    cmask = mask_of(p.C)
    rows = list(g.rows)
    for x in p.half_set:
        rows[x] ^= cmask
        for c in p.C:
            rows[c] ^= 1 << x
    return Graph(g.n, rows, check=False)


# ----------------------------------------------------------------------
# WQH
# ----------------------------------------------------------------------
def classify_wqh(g: Graph, C1: Sequence[int], C2: Sequence[int]) -> WqhPartition | Rejection:
    C1 = tuple(sorted(C1))
    C2 = tuple(sorted(C2))
    if len(C1) != len(C2):
        raise ValueError(f"blocks have different sizes {len(C1)} and {len(C2)}")
    if len(set(C1 + C2)) != 2 * len(C1) or not C1:
        raise ValueError("blocks must be non-empty, duplicate-free and disjoint")
    if not all(0 <= c < g.n for c in C1 + C2):
        raise ValueError("blocks must be subsets of the vertex set")
    ell = len(C1)
    rows = g.rows
    m1, m2 = mask_of(C1), mask_of(C2)
    d1 = {(rows[c] & m1).bit_count() for c in C1}
    if len(d1) != 1:
        return Rejection("A", f"induced subgraph on {C1} is not regular")
    d2 = {(rows[c] & m2).bit_count() for c in C2}
    if d2 != d1:
        return Rejection("B", f"induced subgraph on {C2} is not {min(d1)}-regular")
    cross = {(rows[c] & m2).bit_count() for c in C1} | {(rows[c] & m1).bit_count() for c in C2}
    if len(cross) != 1:
        return Rejection("C", "bipartite graph between the blocks is not regular")
    union = m1 | m2
    switch = []
    for x in range(g.n):
        if union >> x & 1:
            continue
        seen = rows[x] & union
        if seen == m1 or seen == m2:
            switch.append(x)
        elif (seen & m1).bit_count() != (seen & m2).bit_count():
            return Rejection("D", f"vertex {x} sees the blocks unequally")
    if not switch:
        return Rejection("E", "no outside vertex sees exactly one whole block")
    if C2[0] < C1[0]:
        C1, C2 = C2, C1
    return WqhPartition(ell, C1, C2, tuple(switch))


def _wqh_from_pair(g: Graph, ell: int, C1: tuple[int, ...], C2: tuple[int, ...]) -> WqhPartition:
    m1, m2 = mask_of(C1), mask_of(C2)
    union = m1 | m2
    switch = tuple(x for x in bits(((1 << g.n) - 1) & ~union) if (g.rows[x] & union) in (m1, m2))
    return WqhPartition(ell, tuple(C1), tuple(C2), switch)


def enumerate_wqh_partitions(g: Graph, ell: int, *, witnesses: Sequence[int] | None = None) -> Iterator[WqhPartition]:
    """Every valid unordered pair ``{C1, C2}`` of ``ell``-sets exactly once.

    Pairs are grouped by their smallest switched vertex (the witness), which
    sees one block entirely and the other not at all; ``witnesses`` restricts
    which groups are produced.
    """
    if ell < 1:
        raise ValueError("block size must be positive")
    if 2 * ell >= g.n:
        raise ValueError(f"need 2*ell < n, got ell={ell}, n={g.n}")
    for x in (range(g.n) if witnesses is None else witnesses):
        for C1, C2 in _kernels.wqh_block(g, ell, x):
            yield _wqh_from_pair(g, ell, tuple(C1), tuple(C2))


def apply_wqh(g: Graph, p: WqhPartition) -> Graph:
    chk = classify_wqh(g, p.C1, p.C2)
    if not chk or chk.switch_set != p.switch_set:
        raise InvalidPartitionError(f"stale WQH partition {p.C1}|{p.C2}: {getattr(chk, 'reason', 'switch set differs')}")
    union = mask_of(p.C1 + p.C2)
    rows = list(g.rows)
    for x in p.switch_set:
        rows[x] ^= union
        for c in p.C1 + p.C2:
            rows[c] ^= 1 << x
    return Graph(g.n, rows, check=False)


# ----------------------------------------------------------------------
# dispatch by switch kind
# ----------------------------------------------------------------------
SWITCH_KINDS = ("gm4", "wqh2", "wqh3", "wqh4")


def enumerate_partitions(g: Graph, kind: str):
    if kind == "gm4":
        return enumerate_gm_partitions(g)
    if kind in ("wqh2", "wqh3", "wqh4"):
        return enumerate_wqh_partitions(g, int(kind[3]))
    raise ValueError(f"unknown switch kind {kind!r}; choose from {SWITCH_KINDS}")


def apply_partition(g: Graph, p) -> Graph:
    return apply_gm(g, p) if isinstance(p, GmPartition) else apply_wqh(g, p)


def switch_unchecked(g: Graph, p) -> Graph:
    """Apply a partition produced by the enumerators for ``g`` without revalidating."""
    if isinstance(p, GmPartition):
        touched, flip = p.half_set, mask_of(p.C)
    else:
        touched, flip = p.switch_set, mask_of(p.C1 + p.C2)
    rows = list(g.rows)
    fb = bits(flip)
    for x in touched:
        rows[x] ^= flip
        bx = 1 << x
        for c in fb:
            rows[c] ^= bx
    return Graph(g.n, rows, check=False)


def permute_partition(p, gamma: Sequence[int]):
    """Image of a partition under a vertex permutation (for automorphism orbits)."""
    if isinstance(p, GmPartition):
        return GmPartition(tuple(sorted(gamma[c] for c in p.C)), tuple(sorted(gamma[x] for x in p.half_set)))
    a = tuple(sorted(gamma[c] for c in p.C1))
    b = tuple(sorted(gamma[c] for c in p.C2))
    if b[0] < a[0]:
        a, b = b, a
    return WqhPartition(p.ell, a, b, tuple(sorted(gamma[x] for x in p.switch_set)))


def partition_key(p) -> tuple:
    return p.C if isinstance(p, GmPartition) else (p.C1, p.C2)


# ----------------------------------------------------------------------
# prefix pruning bounds (mirrors the compiled search)
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class PruningBounds:
    """Degree ranges for the prefix ``c_1..c_m`` of an ordered WQH candidate.

    ``k11/K11`` are min/max degrees inside the first block's prefix,
    ``k22/K22`` inside the second block's prefix, ``k12/K12`` the cross degrees
    on the first block and ``k21/K21`` on the second block's prefix.
    """

    ell: int
    m: int
    k11: int
    K11: int
    k22: int = 0
    K22: int = 0
    k12: int = 0
    K12: int = 0
    k21: int = 0
    K21: int = 0

    def discard(self) -> bool:
        ell, m = self.ell, self.m
        if m <= ell:
            return self.K11 - self.k11 > ell - m
        return (
            self.K22 - self.k22 > 2 * ell - m
            or self.K21 > self.k21
            or self.K12 - self.k12 > 2 * ell - m
        )


def pruning_bounds(g: Graph, seq: Sequence[int], ell: int) -> list[PruningBounds]:
    """Bounds for every prefix of ``seq`` (first ``ell`` entries form block one)."""
    rows = g.rows
    out = []
    for m in range(1, len(seq) + 1):
        first = seq[:min(m, ell)]
        fm = mask_of(first)
        d1 = [(rows[c] & fm).bit_count() for c in first]
        if m <= ell:
            out.append(PruningBounds(ell, m, min(d1), max(d1)))
            continue
        second = seq[ell:m]
        sm = mask_of(second)
        d2 = [(rows[c] & sm).bit_count() for c in second]
        x12 = [(rows[c] & sm).bit_count() for c in first]
        x21 = [(rows[c] & fm).bit_count() for c in second]
        out.append(PruningBounds(ell, m, min(d1), max(d1), min(d2), max(d2), min(x12), max(x12), min(x21), max(x21)))
    return out


# ----------------------------------------------------------------------
# GM on |C| = 4 versus WQH of type 2,2
# ----------------------------------------------------------------------
def gm_wqh_agreement(g: Graph, C: Sequence[int], split: tuple[Sequence[int], Sequence[int]]) -> bool:
    """Whether GM switching on ``C`` and WQH switching on ``split`` give isomorphic graphs."""
    from .canon import canonical_key

    C1, C2 = split
    if sorted(C) != sorted(tuple(C1) + tuple(C2)):
        raise NotApplicableError("the split must partition C")
    pg = classify_gm(g, C)
    pw = classify_wqh(g, C1, C2)
    if not pg or not pw:
        raise NotApplicableError(f"preconditions fail: {getattr(pg, 'reason', '')} {getattr(pw, 'reason', '')}".strip())
    return canonical_key(apply_gm(g, pg)) == canonical_key(apply_wqh(g, pw))


def splits_of(C: Sequence[int]) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """The three ways to cut a 4-set into two pairs."""
    a, b, c, d = sorted(C)
    return [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))]
