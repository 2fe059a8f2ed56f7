"""Graph representation, graph6 I/O and strongly-regular verification.

A :class:`Graph` stores each adjacency row as a Python ``int`` used as a
bitset (bit ``v`` of ``rows[u]`` is set iff ``u ~ v``).  All neighbourhood
predicates reduce to ``&`` plus ``int.bit_count``.
"""
from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

GRAPH6_HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Base class for graph6 decoding failures."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class MalformedHeaderError(Graph6Error):
    pass


class NonPrintableByteError(Graph6Error):
    pass


class TruncatedDataError(Graph6Error):
    pass


class TrailingDataError(Graph6Error):
    pass


class InfeasibleParametersError(ValueError):
    pass


class Graph:
    """Simple undirected graph on ``0..n-1`` held as bitset rows.

    Instances are treated as immutable; every switching operation returns a
    new graph.
    """

    __slots__ = ("n", "rows", "_words", "_hash")

    def __init__(self, n: int, rows: Sequence[int], *, check: bool = True):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        self.n = n
        self.rows = tuple(rows)
        self._words = None
        self._hash = None
        if check:
            self._check()

    def _check(self) -> None:
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise ValueError(f"row {u} has bits outside 0..{self.n - 1}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            r = row
            while r:
                low = r & -r
                v = low.bit_length() - 1
                if not self.rows[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
                r ^= low

    # constructors -----------------------------------------------------
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, check=False)

    @classmethod
    def from_adjacency(cls, n: int, adjacent) -> "Graph":
        """Build from a symmetric predicate ``adjacent(u, v)`` evaluated on ``u < v``."""
        rows = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if adjacent(u, v):
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
        return cls(n, rows, check=False)

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        n = len(matrix)
        rows = []
        for u in range(n):
            r = 0
            for v in range(n):
                if matrix[u][v]:
                    r |= 1 << v
            rows.append(r)
        return cls(n, rows)

    # basic queries ----------------------------------------------------
    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return bits(self.rows[u])

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.rows):
            for v in bits(row >> (u + 1)):
                yield u, u + 1 + v

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, [(full ^ r) & ~(1 << u) for u, r in enumerate(self.rows)], check=False)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which vertex ``perm[u]`` plays the role of ``u``."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise ValueError("not a permutation")
        rows = [0] * n
        for u, row in enumerate(self.rows):
            pu = perm[u]
            r = 0
            for v in bits(row):
                r |= 1 << perm[v]
            rows[pu] = r
        return Graph(n, rows, check=False)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        idx = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            r = 0
            for w in bits(self.rows[v]):
                if w in idx:
                    r |= 1 << idx[w]
            rows.append(r)
        return Graph(len(vertices), rows, check=False)

    def words(self) -> array:
        """Rows packed as ``2*n`` little-endian 64-bit words (n <= 128 only)."""
        if self._words is None:
            if self.n > 128:
                raise ValueError("packed rows are only available for n <= 128")
            mask = (1 << 64) - 1
            w = array("Q", bytes(16 * self.n))
            for u, r in enumerate(self.rows):
                w[2 * u] = r & mask
                w[2 * u + 1] = r >> 64
            self._words = w
        return self._words

    def to_matrix(self) -> list[list[int]]:
        return [[r >> v & 1 for v in range(self.n)] for r in self.rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def bits(x: int) -> list[int]:
    """Indices of the set bits of ``x`` in increasing order."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# ----------------------------------------------------------------------
# graph6
# ----------------------------------------------------------------------
def _size_header(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])


def emit_graph6(g: Graph) -> bytes:
    """Encode ``g`` as a graph6 record (no header, no newline)."""
    n = g.n
    rows = g.rows
    out = bytearray(_size_header(n))
    acc = 0
    nb = 0
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = acc << 1 | (rj >> i & 1)
            nb += 1
            if nb == 6:
                out.append(acc + 63)
                acc = 0
                nb = 0
    if nb:
        out.append((acc << (6 - nb)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    """Decode a single graph6 record.

    A leading ``>>graph6<<`` header and one trailing newline are tolerated.
    """
    if isinstance(text, str):
        text = text.encode("latin-1")
    data = bytes(text)
    start = 0
    if data.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    end = len(data)
    if end > start and data[end - 1] == 10:
        end -= 1
        if end > start and data[end - 1] == 13:
            end -= 1
    for pos in range(start, end):
        c = data[pos]
        if c < 63 or c > 126:
            raise NonPrintableByteError(f"byte {c!r} outside the graph6 range 63..126", pos)
    if end <= start:
        raise MalformedHeaderError("empty record", start)

    pos = start
    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    elif end - pos >= 2 and data[pos + 1] == 126:
        if end - pos < 8:
            raise MalformedHeaderError("truncated 8-byte size header", pos)
        n = 0
        for c in data[pos + 2:pos + 8]:
            n = n << 6 | (c - 63)
        if n < 258048:
            raise MalformedHeaderError("non-minimal 8-byte size header", pos)
        pos += 8
    else:
        if end - pos < 4:
            raise MalformedHeaderError("truncated 4-byte size header", pos)
        n = 0
        for c in data[pos + 1:pos + 4]:
            n = n << 6 | (c - 63)
        if n < 63:
            raise MalformedHeaderError("non-minimal 4-byte size header", pos)
        pos += 4

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    avail = end - pos
    if avail < nbytes:
        raise TruncatedDataError(f"expected {nbytes} data bytes for n={n}, found {avail}", end)
    if avail > nbytes:
        raise TrailingDataError("unexpected bytes after the bit stream", pos + nbytes)

    stream = 0
    for c in data[pos:pos + nbytes]:
        stream = stream << 6 | (c - 63)
    pad = nbytes * 6 - nbits
    if pad and stream & ((1 << pad) - 1):
        raise TrailingDataError("non-zero padding bits", end - 1)
    stream >>= pad

    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if stream >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, rows, check=False)


def read_graph6_lines(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    for lineno, line in enumerate(lines, 1):
        if isinstance(line, str):
            line = line.encode("latin-1")
        line = line.rstrip(b"\r\n")
        if lineno == 1 and line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER):]
            if not line:
                continue
        if not line:
            continue
        yield parse_graph6(line)


# ----------------------------------------------------------------------
# strongly regular graphs
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int

    def feasible(self) -> bool:
        return self.k * (self.k - self.lam - 1) == (self.n - self.k - 1) * self.mu

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lam, self.mu)

    def __str__(self) -> str:
        return f"({self.n},{self.k},{self.lam},{self.mu})"


@dataclass(frozen=True)
class NotSRG:
    """Why a graph failed :func:`verify_srg`."""

    reason: str
    pair: tuple[int, int] | None = None
    degenerate: bool = False

    def __bool__(self) -> bool:
        return False


def common_neighbors(g: Graph, u: int, v: int) -> int:
    if u == v:
        raise ValueError("common_neighbors needs two distinct vertices")
    return (g.rows[u] & g.rows[v]).bit_count()


def verify_srg(g: Graph) -> SrgParams | NotSRG:
    n = g.n
    if n < 3:
        raise ValueError("verify_srg needs at least 3 vertices")
    rows = g.rows
    k = rows[0].bit_count()
    for u in range(1, n):
        if rows[u].bit_count() != k:
            return NotSRG(f"irregular: deg(0)={k}, deg({u})={rows[u].bit_count()}", (0, u))
    if k == 0 or k == n - 1:
        return NotSRG("complete graph" if k else "empty graph", None, degenerate=True)
    lam = mu = None
    for u in range(n):
        ru = rows[u]
        for v in range(u + 1, n):
            c = (ru & rows[v]).bit_count()
            if ru >> v & 1:
                if lam is None:
                    lam = c
                elif c != lam:
                    return NotSRG(f"adjacent pair has {c} common neighbours, expected {lam}", (u, v))
            else:
                if mu is None:
                    mu = c
                elif c != mu:
                    return NotSRG(f"non-adjacent pair has {c} common neighbours, expected {mu}", (u, v))
    return SrgParams(n, k, lam, mu)


def require_srg(g: Graph) -> SrgParams:
    p = verify_srg(g)
    if isinstance(p, NotSRG):
        raise ValueError(f"not a strongly regular graph: {p.reason}")
    return p


# ----------------------------------------------------------------------
# spectrum
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class Eigenvalue:
    """The exact real number ``(a + b*sqrt(d)) / 2``.

    Rational values are normalised to ``b = d = 0``.
    """

    a: int
    b: int = 0
    d: int = 0

    @property
    def is_integer(self) -> bool:
        return self.b == 0 and self.a % 2 == 0

    def __float__(self) -> float:
        return (self.a + self.b * math.sqrt(self.d)) / 2

    def __int__(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.a // 2

    def __str__(self) -> str:
        if self.b == 0:
            return str(Fraction(self.a, 2))
        sign = "+" if self.b > 0 else "-"
        coeff = "" if abs(self.b) == 1 else str(abs(self.b))
        return f"({self.a}{sign}{coeff}sqrt({self.d}))/2"


@dataclass(frozen=True)
class Spectrum:
    k: int
    r: Eigenvalue
    s: Eigenvalue
    f: int
    g: int

    def eigenvalues(self) -> list[tuple[Eigenvalue, int]]:
        return [(Eigenvalue(2 * self.k), 1), (self.r, self.f), (self.s, self.g)]


def srg_spectrum(p: SrgParams) -> Spectrum:
    n, k, lam, mu = p.as_tuple()
    if not p.feasible():
        raise InfeasibleParametersError(f"{p} violates k(k-lambda-1) = (n-k-1)mu")
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    root = math.isqrt(disc)
    if root * root == disc:
        r2, s2 = lam - mu + root, lam - mu - root
        r, s = Eigenvalue(r2), Eigenvalue(s2)
        # f*r + g*s = -k with f + g = n - 1, all doubled
        num = -2 * k - (n - 1) * s2
        den = r2 - s2
        if num % den:
            raise InfeasibleParametersError(f"{p} has non-integral multiplicities")
        f = num // den
        g = n - 1 - f
    else:
        r, s = Eigenvalue(lam - mu, 1, disc), Eigenvalue(lam - mu, -1, disc)
        # irrational eigenvalues must be conjugate with equal multiplicity
        if 2 * k + (n - 1) * (lam - mu) != 0 or (n - 1) % 2:
            raise InfeasibleParametersError(f"{p} has non-integral multiplicities")
        f = g = (n - 1) // 2
    if f < 0 or g < 0:
        raise InfeasibleParametersError(f"{p} has negative multiplicities")
    return Spectrum(k, r, s, f, g)
