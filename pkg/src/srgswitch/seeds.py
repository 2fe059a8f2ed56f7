"""Seed graphs: finite-geometry constructions, triple-system block graphs and
the embedded graph6 seeds.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from pathlib import Path
from typing import Sequence

from ._appendix import APPENDIX_SEEDS
from .fields import FiniteField, field
from .graph import Graph, parse_graph6


class TripleSystemError(ValueError):
    pass


# ----------------------------------------------------------------------
# quadratic forms and affine graphs
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class QuadraticFormSpec:
    """``Q(x) = sum(c * x_i * x_j)`` over the listed ``(i, j, c)`` terms.

    Indices are 0-based and each ``c`` is a field element.
    """

    dim: int
    terms: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for i, j, _ in self.terms:
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ValueError(f"term ({i},{j}) outside dimension {self.dim}")

    def evaluate(self, x: Sequence[int], F: FiniteField) -> int:
        acc = 0
        for i, j, c in self.terms:
            acc = F.add[acc][F.mul[c][F.mul[x[i]][x[j]]]]
        return acc


def hyperbolic_form(d: int) -> QuadraticFormSpec:
    """``x1 x2 + x3 x4 + ... + x_{2d-1} x_{2d}``."""
    return QuadraticFormSpec(2 * d, tuple((2 * i, 2 * i + 1, 1) for i in range(d)))


def elliptic_form(d: int, q: int) -> QuadraticFormSpec:
    """An irreducible binary form ``a x1^2 + b x1 x2 + x2^2`` plus ``d-1`` hyperbolic planes."""
    a, b = _irreducible_binary(q)
    terms = [(0, 0, a), (0, 1, b), (1, 1, 1)]
    terms += [(2 * i, 2 * i + 1, 1) for i in range(1, d)]
    return QuadraticFormSpec(2 * d, tuple(t for t in terms if t[2]))


def diagonal_form(coeffs: Sequence[int]) -> QuadraticFormSpec:
    return QuadraticFormSpec(len(coeffs), tuple((i, i, c) for i, c in enumerate(coeffs) if c))


def _irreducible_binary(q: int) -> tuple[int, int]:
    F = field(q)
    for a, b in product(range(1, q), range(q)):
        # a x^2 + b x + 1 has no root in F_q
        if all(F.add[F.add[F.mul[a][F.mul[x][x]]][F.mul[b][x]]][1] for x in range(q)):
            return a, b
    raise AssertionError(f"no irreducible binary form over GF({q})")


def _vector_index(v: Sequence[int], q: int) -> int:
    i = 0
    for c in v:
        i = i * q + c
    return i


def cayley_graph(q: int, dim: int, connection: set[tuple[int, ...]]) -> Graph:
    """Cayley graph of ``(F_q^dim, +)`` for a symmetric connection set."""
    F = field(q)
    vecs = list(F.vectors(dim))
    n = len(vecs)
    rows = [0] * n
    for x in vecs:
        xi = _vector_index(x, q)
        r = 0
        for s in connection:
            y = tuple(F.add[a][b] for a, b in zip(x, s))
            r |= 1 << _vector_index(y, q)
        rows[xi] = r
    return Graph(n, rows)


def affine_orthogonal_graph(spec: QuadraticFormSpec, q: int, adjacency_value: int) -> Graph:
    """Vectors of ``F_q^dim``; ``x ~ y`` iff ``x != y`` and ``Q(x - y)`` equals the value."""
    F = field(q)
    if not 0 <= adjacency_value < q:
        raise ValueError(f"{adjacency_value} is not an element of GF({q})")
    if spec.dim < 1:
        raise ValueError("dimension mismatch: form has no variables")
    zero = (0,) * spec.dim
    conn = {x for x in F.vectors(spec.dim) if x != zero and spec.evaluate(x, F) == adjacency_value}
    return cayley_graph(q, spec.dim, conn)


def vo_graph(d: int, q: int, sign: int) -> Graph:
    """``VO^+/-(2d, q)``: singular differences of a hyperbolic (+) or elliptic (-) form."""
    spec = hyperbolic_form(d) if sign > 0 else elliptic_form(d, q)
    return affine_orthogonal_graph(spec, q, 0)


def vo_plus_64_seed() -> Graph:
    """The SRG(64,28,12,12) seed: hyperbolic form on ``F_2^6`` at level set 1."""
    return affine_orthogonal_graph(hyperbolic_form(3), 2, 1)


def vno_form(sign: int, q: int, dim: int) -> QuadraticFormSpec:
    """Diagonal form of hyperbolic (+) or elliptic (-) type in even dimension.

    Over GF(3) in dimension 4 the sum of squares is hyperbolic and
    ``x1^2 - x2^2 + x3^2 + x4^2`` is elliptic.
    """
    if q % 2 == 0 or dim % 2:
        raise ValueError("VNO graphs need odd q and even dimension")
    F = field(q)
    coeffs = [1] * dim
    disc = 1 if (dim // 2) % 2 == 0 else F.neg[1]
    hyperbolic = disc in F.squares()
    if hyperbolic != (sign > 0):
        coeffs[1] = next(a for a in range(1, q) if a not in F.squares())
    return diagonal_form(coeffs)


def vno_graph(sign: int, q: int = 3, dim: int = 4) -> Graph:
    """``VNO^+/-_dim(q)``: ``x ~ y`` iff ``Q(x - y) = 1``.

    ``vno_graph(+1)`` is SRG(81,24,9,6); ``vno_graph(-1)`` is SRG(81,30,9,12),
    the point graph of the van Lint-Schrijver partial geometry.
    """
    return affine_orthogonal_graph(vno_form(sign, q, dim), q, 1)


# ----------------------------------------------------------------------
# projective / bilinear constructions
# ----------------------------------------------------------------------
def projective_points(F: FiniteField, dim: int) -> list[tuple[int, ...]]:
    """1-spaces of ``F_q^dim`` as vectors whose first nonzero entry is 1, lexicographic."""
    return [v for v in F.vectors(dim) if any(v) and next(c for c in v if c) == 1]


def sp_graph(d: int, q: int) -> Graph:
    """Collinearity graph of ``Sp(2d, q)``."""
    if d < 1:
        raise ValueError("d must be positive")
    F = field(q)
    pts = projective_points(F, 2 * d)

    def form(x, y):
        acc = 0
        for i in range(0, 2 * d, 2):
            acc = F.add[acc][F.sub(F.mul[x[i]][y[i + 1]], F.mul[x[i + 1]][y[i]])]
        return acc

    return Graph.from_adjacency(len(pts), lambda u, v: form(pts[u], pts[v]) == 0)


def _rank_le_one(F: FiniteField, rows: Sequence[Sequence[int]]) -> bool:
    for r1, r2 in combinations(rows, 2):
        for i, j in combinations(range(len(r1)), 2):
            if F.sub(F.mul[r1[i]][r2[j]], F.mul[r1[j]][r2[i]]):
                return False
    return True


def bilin_graph(q: int, m: int) -> Graph:
    """``Bilin(2, m-2, q)``.

    The 2-spaces of ``F_q^m`` skew to a fixed (m-2)-space are the row spaces of
    ``[I_2 | A]`` for ``2 x (m-2)`` matrices ``A``; two of them meet in a point
    iff ``rank(A - B) = 1``.  Vertex ``i`` is the matrix whose row-major entries
    are the base-q digits of ``i``.
    """
    if m < 4:
        raise ValueError("bilinear forms graph needs m >= 4")
    F = field(q)
    e = m - 2
    dim = 2 * e
    conn = set()
    for v in F.vectors(dim):
        if any(v) and _rank_le_one(F, (v[:e], v[e:])):
            conn.add(v)
    return cayley_graph(q, dim, conn)


# ----------------------------------------------------------------------
# triple systems
# ----------------------------------------------------------------------
@dataclass
class TripleSystem:
    v: int
    blocks: list[tuple[int, int, int]] = dc_field(default_factory=list)

    def __post_init__(self):
        self.blocks = [tuple(sorted(b)) for b in self.blocks]
        self.validate()

    def validate(self) -> None:
        seen: dict[tuple[int, int], int] = {}
        for bi, b in enumerate(self.blocks):
            if len(set(b)) != 3 or not all(0 <= p < self.v for p in b):
                raise TripleSystemError(f"block {bi} = {b} is not a 3-subset of 0..{self.v - 1}")
            for pair in combinations(b, 2):
                if pair in seen:
                    raise TripleSystemError(f"pair {pair} lies in blocks {seen[pair]} and {bi}")
                seen[pair] = bi
        for pair in combinations(range(self.v), 2):
            if pair not in seen:
                raise TripleSystemError(f"pair {pair} is not covered by any block")

    @classmethod
    def parse(cls, text: str) -> "TripleSystem":
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise TripleSystemError("empty triple system")
        v = int(lines[0])
        blocks = []
        for ln in lines[1:]:
            parts = ln.replace(",", " ").split()
            if len(parts) != 3:
                raise TripleSystemError(f"block line {ln!r} does not have three points")
            blocks.append(tuple(int(p) for p in parts))
        return cls(v, blocks)

    @classmethod
    def read(cls, path: str | Path) -> "TripleSystem":
        return cls.parse(Path(path).read_text())

    def dumps(self) -> str:
        return "\n".join([str(self.v)] + [" ".join(map(str, b)) for b in self.blocks]) + "\n"

    @classmethod
    def cyclic(cls, v: int, base_blocks: Sequence[Sequence[int]]) -> "TripleSystem":
        blocks = set()
        for b in base_blocks:
            for t in range(v):
                blocks.add(tuple(sorted((x + t) % v for x in b)))
        return cls(v, sorted(blocks))


def fano_plane() -> TripleSystem:
    return TripleSystem.cyclic(7, [(0, 1, 3)])


def affine_plane_3() -> TripleSystem:
    """Lines of ``AG(2,3)``; point ``(x, y)`` is ``3x + y``."""
    pts = [(x, y) for x in range(3) for y in range(3)]
    lines = set()
    for p, q in combinations(pts, 2):
        d = ((q[0] - p[0]) % 3, (q[1] - p[1]) % 3)
        line = tuple(sorted(3 * ((p[0] + t * d[0]) % 3) + (p[1] + t * d[1]) % 3 for t in range(3)))
        lines.add(line)
    return TripleSystem(9, sorted(lines))


def cyclic_sts19() -> TripleSystem:
    return TripleSystem.cyclic(19, [(0, 1, 5), (0, 2, 8), (0, 3, 10)])


def sts_block_graph(ts: TripleSystem) -> Graph:
    """Blocks as vertices, adjacent when they share a point."""
    ts.validate()
    blocks = [set(b) for b in ts.blocks]
    return Graph.from_adjacency(len(blocks), lambda a, b: bool(blocks[a] & blocks[b]))


# ----------------------------------------------------------------------
# generalized quadrangle GQ(5,3)
# ----------------------------------------------------------------------
def gq53_lines() -> tuple[list[frozenset[int]], list[list[int]]]:
    """Lines of ``T2*(O)`` in ``AG(3,4)`` and, per affine point, the lines through it.

    ``O`` is the hyperoval conic ``y^2 = xz`` plus its nucleus in the plane at
    infinity.  The lines of ``T2*(O)`` are the points of GQ(5,3), and the
    affine points are its lines.
    """
    F = field(4)
    directions = [(1, t, F.mul[t][t]) for t in range(4)] + [(0, 0, 1), (0, 1, 0)]
    lines: list[frozenset[int]] = []
    seen = set()
    for d in directions:
        for p in F.vectors(3):
            pts = frozenset(
                _vector_index(tuple(F.add[a][F.mul[t][b]] for a, b in zip(p, d)), 4) for t in range(4)
            )
            if pts not in seen:
                seen.add(pts)
                lines.append(pts)
    through = [[] for _ in range(64)]
    for li, pts in enumerate(lines):
        for p in pts:
            through[p].append(li)
    return lines, through


def gq53_point_graph() -> Graph:
    lines, through = gq53_lines()
    rows = [0] * len(lines)
    for group in through:
        for a in group:
            for b in group:
                if a != b:
                    rows[a] |= 1 << b
    return Graph(len(lines), rows)


# ----------------------------------------------------------------------
# embedded seeds and name registry
# ----------------------------------------------------------------------
def load_appendix_seed(name: str) -> Graph:
    try:
        _, text = APPENDIX_SEEDS[name]
    except KeyError:
        raise KeyError(f"unknown appendix seed {name!r}; choose from {sorted(APPENDIX_SEEDS)}") from None
    return parse_graph6(text)


# name -> (builder, argument converters, description)
SEED_BUILDERS = {
    "sp": (sp_graph, (int, int), "sp D Q: collinearity graph of Sp(2D,Q)"),
    "vo-": (lambda d, q: vo_graph(d, q, -1), (int, int), "vo- D Q: VO^-(2D,Q)"),
    "vo+": (lambda d, q: vo_graph(d, q, +1), (int, int), "vo+ D Q: VO^+(2D,Q) (level set 0)"),
    "vo+64": (vo_plus_64_seed, (), "vo+64: SRG(64,28,12,12) seed"),
    "vno+": (lambda d, q: vno_graph(+1, q, d), (int, int), "vno+ D Q: VNO^+_D(Q)"),
    "vno-": (lambda d, q: vno_graph(-1, q, d), (int, int), "vno- D Q: VNO^-_D(Q)"),
    "bilin": (bilin_graph, (int, int), "bilin Q M: Bilin(2,M-2,Q)"),
    "gq53": (gq53_point_graph, (), "gq53: point graph of GQ(5,3)"),
    "appendix": (load_appendix_seed, (str,), f"appendix NAME: one of {sorted(APPENDIX_SEEDS)}"),
    "sts": (lambda path: sts_block_graph(TripleSystem.read(path)), (str,), "sts FILE: block graph of a triple system"),
}


def build_seed(name: str, *args: str) -> Graph:
    if name not in SEED_BUILDERS:
        raise KeyError(f"unknown seed {name!r}; known: {', '.join(SEED_BUILDERS)}")
    fn, conv, usage = SEED_BUILDERS[name]
    if len(args) != len(conv):
        raise ValueError(f"usage: {usage}")
    return fn(*(c(a) for c, a in zip(conv, args)))
