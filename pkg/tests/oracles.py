"""Independent reference implementations used only by the tests.

Everything here works from adjacency matrices or networkx and shares no code
with the package beyond the ``Graph`` container.
"""
from __future__ import annotations

from itertools import combinations

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import GraphMatcher


def matrix(g) -> np.ndarray:
    A = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges():
        A[u, v] = A[v, u] = 1
    return A


def to_nx(g) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def isomorphic(g, h) -> bool:
    return nx.is_isomorphic(to_nx(g), to_nx(h))


def aut_order_brute(g) -> int:
    G = to_nx(g)
    return sum(1 for _ in GraphMatcher(G, G).isomorphisms_iter())


def srg_params(g):
    """``(n, k, lam, mu)`` from ``A^2``, or ``None``."""
    A = matrix(g)
    n = g.n
    deg = A.sum(axis=1)
    if len(set(deg.tolist())) != 1:
        return None
    A2 = A @ A
    off = ~np.eye(n, dtype=bool)
    lam = set(A2[(A == 1) & off].tolist())
    mu = set(A2[(A == 0) & off].tolist())
    if len(lam) > 1 or len(mu) > 1:
        return None
    return n, int(deg[0]), (lam.pop() if lam else None), (mu.pop() if mu else None)


def spectrum(g, digits: int = 6) -> list[float]:
    return sorted(np.round(np.linalg.eigvalsh(matrix(g).astype(float)), digits).tolist())


def naive_gm(g) -> set[tuple[int, ...]]:
    A = matrix(g)
    out = set()
    for C in combinations(range(g.n), 4):
        sub = A[np.ix_(C, C)].sum(axis=1)
        if len(set(sub.tolist())) != 1:
            continue
        counts = A[:, C].sum(axis=1)
        outside = [x for x in range(g.n) if x not in C]
        if any(counts[x] not in (0, 2, 4) for x in outside):
            continue
        if any(counts[x] == 2 for x in outside):
            out.add(C)
    return out


def naive_wqh(g, ell: int) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    A = matrix(g)
    n = g.n
    regular = {}
    for C in combinations(range(n), ell):
        d = set(A[np.ix_(C, C)].sum(axis=1).tolist())
        if len(d) == 1:
            regular[C] = d.pop()
    out = set()
    items = sorted(regular.items())
    for i, (C1, d1) in enumerate(items):
        for C2, d2 in items[i + 1:]:
            if d1 != d2 or set(C1) & set(C2):
                continue
            cross = A[np.ix_(C1, C2)]
            if len(set(cross.sum(axis=1).tolist()) | set(cross.sum(axis=0).tolist())) != 1:
                continue
            ok = True
            hit = False
            for x in range(n):
                if x in C1 or x in C2:
                    continue
                a = [int(A[x, c]) for c in C1]
                b = [int(A[x, c]) for c in C2]
                if (all(a) and not any(b)) or (all(b) and not any(a)):
                    hit = True
                elif sum(a) != sum(b):
                    ok = False
                    break
            if ok and hit:
                out.add((C1, C2) if C1[0] < C2[0] else (C2, C1))
    return out


def gm_switch(g, C):
    A = matrix(g)
    n = g.n
    for x in range(n):
        if x in C:
            continue
        if A[x, list(C)].sum() == 2:
            for c in C:
                A[x, c] = A[c, x] = 1 - A[x, c]
    return A


def wqh_switch(g, C1, C2):
    A = matrix(g)
    U = list(C1) + list(C2)
    for x in range(g.n):
        if x in U:
            continue
        seen = {c for c in U if A[x, c]}
        if seen in (set(C1), set(C2)):
            for c in U:
                A[x, c] = A[c, x] = 1 - A[x, c]
    return A


def count_cliques_brute(g, s: int) -> int:
    return sum(1 for c in nx.enumerate_all_cliques(to_nx(g)) if len(c) == s)
