"""Post-hoc analysis of graphs and stores: cliques, packings, partial geometries."""
from __future__ import annotations

import csv
import io
import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .canon import aut_group_order
from .graph import Graph, Graph6Error, bits, mask_of, parse_graph6, verify_srg

DEFAULT_PACKING_CAP = 20_000


class StoreError(Exception):
    def __init__(self, path, lineno: int | None, message: str):
        where = f"{path}:{lineno}" if lineno is not None else str(path)
        super().__init__(f"{where}: {message}")
        self.path = Path(path)
        self.lineno = lineno


class NotApplicableError(ValueError):
    pass


def _rows(g: Graph, complement: bool) -> list[int]:
    return list(g.complement().rows if complement else g.rows)


# ----------------------------------------------------------------------
# cliques
# ----------------------------------------------------------------------
def _color_bound(rows, cand: int) -> int:
    """Number of colours in a greedy colouring of ``cand`` (an upper bound on its clique number)."""
    colors = 0
    left = cand
    while left:
        colors += 1
        q = left
        while q:
            low = q & -q
            v = low.bit_length() - 1
            left &= ~low
            q &= ~low & ~rows[v]
    return colors


def iter_cliques(g: Graph, s: int, complement: bool = False) -> Iterator[tuple[int, ...]]:
    """All ``s``-cliques as increasing vertex tuples, in lexicographic order."""
    if s < 1:
        raise ValueError("clique size must be positive")
    rows = _rows(g, complement)
    n = g.n
    above = [((1 << n) - 1) ^ ((2 << v) - 1) for v in range(n)]
    stack: list[int] = []

    def rec(cand: int, need: int):
        if need == 0:
            yield tuple(stack)
            return
        if cand.bit_count() < need:
            return
        if need > 2 and _color_bound(rows, cand) < need:
            return
        for v in bits(cand):
            nxt = cand & rows[v] & above[v]
            if need == 1 or nxt.bit_count() >= need - 1:
                stack.append(v)
                yield from rec(nxt, need - 1)
                stack.pop()

    yield from rec((1 << n) - 1, s)


def clique_count(g: Graph, s: int, complement: bool = False) -> int:
    if not 1 <= s <= max(g.n, 1):
        raise ValueError(f"clique size must be in 1..{g.n}")
    return sum(1 for _ in iter_cliques(g, s, complement))


def _max_clique_rows(rows, n: int, cand: int | None = None) -> list[int]:
    best: list[int] = []
    cur: list[int] = []

    def expand(c: int):
        nonlocal best
        if not c:
            if len(cur) > len(best):
                best = cur[:]
            return
        # colour classes, then branch from the highest colour down
        order = []
        left = c
        color = 0
        while left:
            color += 1
            q = left
            while q:
                low = q & -q
                v = low.bit_length() - 1
                left &= ~low
                q &= ~low & ~rows[v]
                order.append((v, color))
        for v, col in reversed(order):
            if len(cur) + col <= len(best):
                return
            cur.append(v)
            expand(c & rows[v])
            cur.pop()
            c &= ~(1 << v)

    expand(((1 << n) - 1) if cand is None else cand)
    return sorted(best)


def max_clique(g: Graph, complement: bool = False) -> list[int]:
    return _max_clique_rows(_rows(g, complement), g.n)


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def coclique_number(g: Graph) -> int:
    return len(max_clique(g, complement=True))


def is_clique(g: Graph, vertices: Iterable[int], complement: bool = False) -> bool:
    vs = list(vertices)
    return all(g.adjacent(u, v) != complement for i, u in enumerate(vs) for v in vs[i + 1:])


# ----------------------------------------------------------------------
# packings
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class PackingResult:
    size: int
    witness: tuple[tuple[int, ...], ...]
    n_cliques: int
    capped: bool = False

    @property
    def exact(self) -> bool:
        return not self.capped


def _compatible(a: int, b: int) -> bool:
    return (a & b).bit_count() <= 1


def clique_packing(g: Graph, s: int, complement: bool = False, cap: int = DEFAULT_PACKING_CAP) -> PackingResult:
    """Largest family of ``s``-cliques pairwise meeting in at most one vertex.

    Exact when at most ``cap`` cliques exist; otherwise a greedy family over
    the first ``cap`` cliques is returned as a lower bound.
    """
    cliques = []
    capped = False
    for c in iter_cliques(g, s, complement):
        if len(cliques) == cap:
            capped = True
            break
        cliques.append(c)
    masks = [mask_of(c) for c in cliques]
    if capped:
        chosen: list[int] = []
        for i, m in enumerate(masks):
            if all(_compatible(m, masks[j]) for j in chosen):
                chosen.append(i)
        fam = tuple(cliques[i] for i in chosen)
        return PackingResult(len(fam), fam, len(cliques), True)
    m = len(cliques)
    meta = [0] * m
    for i in range(m):
        mi = masks[i]
        for j in range(i + 1, m):
            if _compatible(mi, masks[j]):
                meta[i] |= 1 << j
                meta[j] |= 1 << i
    fam = tuple(cliques[i] for i in _max_clique_rows(meta, m))
    for i, a in enumerate(fam):
        if not is_clique(g, a, complement):
            raise AssertionError(f"packing member {a} is not a clique")
        for b in fam[i + 1:]:
            if len(set(a) & set(b)) > 1:
                raise AssertionError(f"packing members {a} and {b} share two vertices")
    return PackingResult(len(fam), fam, m, False)


# ----------------------------------------------------------------------
# partial geometries
# ----------------------------------------------------------------------
def pg_parameters(s: int, t: int, alpha: int) -> tuple[int, int, int, int]:
    """SRG parameters of the point graph of pg(s, t, alpha)."""
    if s < 1 or t < 1 or alpha < 1 or alpha > min(s, t) + 1:
        raise ValueError(f"invalid geometry orders ({s}, {t}, {alpha})")
    num = (s + 1) * (s * t + alpha)
    if num % alpha:
        raise ValueError(f"pg({s},{t},{alpha}) has a non-integral number of points")
    return num // alpha, s * (t + 1), s - 1 + t * (alpha - 1), alpha * (t + 1)


@dataclass(frozen=True)
class GeometryResult:
    found: bool
    lines: tuple[tuple[int, ...], ...] = ()
    nodes: int = 0
    reason: str = ""

    def __bool__(self) -> bool:
        return self.found


def verify_partial_geometry(g: Graph, lines, s: int, t: int, alpha: int, complement: bool = False) -> str | None:
    """``None`` if ``lines`` form pg(s,t,alpha) with point graph ``g``, else a reason."""
    n = g.n
    rows = _rows(g, complement)
    on = [[] for _ in range(n)]
    cover = [0] * n
    lmask = []
    for li, L in enumerate(lines):
        if len(set(L)) != s + 1:
            return f"line {li} has {len(set(L))} points"
        if not is_clique(g, L, complement):
            return f"line {li} is not a clique"
        m = mask_of(L)
        lmask.append(m)
        for p in L:
            on[p].append(li)
            if cover[p] & m & ~(1 << p):
                return f"an edge at {p} lies on two lines"
            cover[p] |= m & ~(1 << p)
    for p in range(n):
        if len(on[p]) != t + 1:
            return f"point {p} lies on {len(on[p])} lines"
        if cover[p] != rows[p]:
            return f"edges at point {p} are not covered exactly"
    for li, m in enumerate(lmask):
        for p in bits(((1 << n) - 1) & ~m):
            meet = sum(1 for lj in on[p] if lmask[lj] & m)
            if meet != alpha:
                return f"point {p} off line {li} meets it via {meet} lines"
    return None


def detect_partial_geometry(g: Graph, s: int, t: int, alpha: int, use_complement: bool = False,
                            node_limit: int | None = None) -> GeometryResult:
    """Search for a line set making ``g`` (or its complement) the point graph of pg(s,t,alpha).

    Exact cover of the edges by ``(s+1)``-cliques.  A successful result has
    been re-verified by :func:`verify_partial_geometry`.
    """
    want = pg_parameters(s, t, alpha)
    h = g.complement() if use_complement else g
    p = verify_srg(h)
    if not p or p.as_tuple() != want:
        got = p.as_tuple() if p else "not an SRG"
        raise NotApplicableError(f"pg({s},{t},{alpha}) needs SRG{want}, graph is {got}")
    n = g.n
    rows = list(h.rows)
    cliques = list(iter_cliques(h, s + 1))
    masks = [mask_of(c) for c in cliques]
    # lines through each edge, indexed by (min, max)
    through: dict[tuple[int, int], list[int]] = {}
    for i, c in enumerate(cliques):
        for a in range(len(c)):
            for b in range(a + 1, len(c)):
                through.setdefault((c[a], c[b]), []).append(i)
    covered = [0] * n
    chosen: list[int] = []
    nodes = 0
    n_lines = n * (t + 1) // (s + 1)

    def usable(i: int) -> bool:
        m = masks[i]
        return all(not (covered[v] & m) for v in cliques[i])

    def rec() -> bool:
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise _Budget()
        if len(chosen) == n_lines:
            return True
        # the uncovered edge with the fewest usable lines
        best = None
        best_opts = None
        for u in range(n):
            open_nb = rows[u] & ~covered[u] & ~((2 << u) - 1)
            for v in bits(open_nb):
                opts = [i for i in through.get((u, v), ()) if usable(i)]
                if best_opts is None or len(opts) < len(best_opts):
                    best, best_opts = (u, v), opts
                    if len(opts) <= 1:
                        break
            if best_opts is not None and len(best_opts) <= 1:
                break
        if best is None:
            return False
        for i in best_opts:
            m = masks[i]
            for v in cliques[i]:
                covered[v] |= m & ~(1 << v)
            chosen.append(i)
            if rec():
                return True
            chosen.pop()
            for v in cliques[i]:
                covered[v] &= ~(m & ~(1 << v))
        return False

    try:
        ok = rec()
    except _Budget:
        return GeometryResult(False, (), nodes, "node limit reached")
    if not ok:
        return GeometryResult(False, (), nodes, "no line set covers every edge exactly once")
    lines = tuple(cliques[i] for i in sorted(chosen))
    bad = verify_partial_geometry(h, lines, s, t, alpha)
    if bad:
        raise AssertionError(f"geometry search returned an invalid line set: {bad}")
    return GeometryResult(True, lines, nodes)


class _Budget(Exception):
    pass


# ----------------------------------------------------------------------
# K_a - e freeness
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class RamseyVerdict:
    a: int
    b: int
    graph_witness: tuple[int, ...] | None
    complement_witness: tuple[int, ...] | None

    @property
    def contains_a(self) -> bool:
        return self.graph_witness is not None

    @property
    def complement_contains_b(self) -> bool:
        return self.complement_witness is not None

    @property
    def is_witness(self) -> bool:
        return not self.contains_a and not self.complement_contains_b


def find_kminus_e(g: Graph, a: int, complement: bool = False) -> tuple[int, ...] | None:
    """Vertices of a K_a minus an edge (as a subgraph), or ``None``.

    Such a subgraph exists iff two vertices have an ``(a-2)``-clique among
    their common neighbours.  The first two returned vertices are the pair.
    """
    if a < 3:
        raise ValueError("K_a - e needs a >= 3")
    rows = _rows(g, complement)
    n = g.n
    for u in range(n):
        for v in range(u + 1, n):
            common = rows[u] & rows[v]
            if common.bit_count() < a - 2:
                continue
            cl = _max_clique_rows(rows, n, common)
            if len(cl) >= a - 2:
                found = (u, v) + tuple(cl[:a - 2])
                core = found[2:]
                assert all(rows[x] >> y & 1 for i, x in enumerate(core) for y in core[i + 1:])
                assert all(rows[u] >> x & 1 and rows[v] >> x & 1 for x in core)
                return found
    return None


def ramsey_witness_check(g: Graph, a: int, b: int) -> RamseyVerdict:
    """Whether ``g`` is K_a-e free with K_b-e free complement."""
    if a < 3 or b < 3:
        raise ValueError("sizes must be at least 3")
    return RamseyVerdict(a, b, find_kminus_e(g, a), find_kminus_e(g, b, complement=True))


# ----------------------------------------------------------------------
# stores
# ----------------------------------------------------------------------
_LEVEL_RE = re.compile(r"level-(\d+)\.g6$")


def store_files(path: Path | str) -> list[Path]:
    path = Path(path)
    if path.is_file():
        return [path]
    if not path.is_dir():
        raise StoreError(path, None, "no such store")
    files = [p for p in path.iterdir() if _LEVEL_RE.search(p.name)]
    if not files:
        files = sorted(path.glob("*.g6"))
        if not files:
            raise StoreError(path, None, "store holds no graph6 files")
        return files
    return sorted(files, key=lambda p: int(_LEVEL_RE.search(p.name).group(1)))


def iter_store(path: Path | str) -> Iterator[Graph]:
    for f in store_files(path):
        try:
            fh = open(f, "rb")
        except OSError as e:
            raise StoreError(f, None, f"cannot read ({e.strerror})") from e
        with fh:
            for lineno, line in enumerate(fh, 1):
                line = line.rstrip(b"\r\n")
                if not line or line.startswith(b">>graph6<<") and len(line) == 10:
                    continue
                try:
                    yield parse_graph6(line)
                except Graph6Error as e:
                    raise StoreError(f, lineno, str(e)) from e


def aut_histogram(path: Path | str) -> dict[int, int]:
    """Automorphism group order -> number of graphs, ascending by order."""
    c = Counter(aut_group_order(g) for g in iter_store(path))
    return dict(sorted(c.items()))


def clique_census(path: Path | str, s: int, complement: bool = False) -> dict[int, int]:
    """Number of ``s``-cliques -> number of graphs in the store."""
    c = Counter(clique_count(g, s, complement) for g in iter_store(path))
    return dict(sorted(c.items()))


def packing_census(path: Path | str, s: int, complement: bool = False, cap: int = DEFAULT_PACKING_CAP) -> dict[int, int]:
    c = Counter(clique_packing(g, s, complement, cap).size for g in iter_store(path))
    return dict(sorted(c.items()))


def geometry_census(path: Path | str, s: int, t: int, alpha: int, use_complement: bool = False) -> list[tuple[int, bool]]:
    """``(index, found)`` for every graph of the store."""
    return [(i, detect_partial_geometry(g, s, t, alpha, use_complement).found) for i, g in enumerate(iter_store(path))]


def ramsey_census(path: Path | str, a: int, b: int) -> list[tuple[int, bool]]:
    return [(i, ramsey_witness_check(g, a, b).is_witness) for i, g in enumerate(iter_store(path))]


def value_counts_csv(counts: dict, header: tuple[str, str] = ("value", "count")) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for k in sorted(counts):
        w.writerow([k, counts[k]])
    return buf.getvalue()
