from __future__ import annotations

import os
import random
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from srgswitch.graph import Graph
from srgswitch.seeds import build_seed

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

QUICK = os.environ.get("SRGSWITCH_QUICK") == "1"

# (label, constructor args, switch kind, parameters, aut order, depth-2 totals, depth-3 total)
SEEDS = [
    ("sts19-srg57", ("appendix", "sts19-srg57"), "gm4", (57, 24, 11, 9), None, [1, 10, 112], 941),
    ("sp(6,2)", ("sp", "3", "2"), "gm4", (63, 30, 13, 15), 1451520, [1, 3, 55], 3330),
    ("vo-(6,2)", ("vo-", "3", "2"), "gm4", (64, 27, 10, 12), 3317760, [1, 3, 46], None),
    ("vo+64", ("vo+64",), "gm4", (64, 28, 12, 12), 2580480, [1, 3, 55], None),
    ("sts21-srg70", ("appendix", "sts21-srg70"), "gm4", (70, 27, 12, 9), 126, [1, 2, 9], None),
    ("vno+(4,3)", ("vno+", "4", "3"), "wqh3", (81, 24, 9, 6), 93312, [1, 3, 34], None),
    ("vno-(4,3)", ("vno-", "4", "3"), "wqh3", (81, 30, 9, 12), 116640, [1, 3, 24], 168),
    ("bilin(2,2,3)", ("bilin", "3", "4"), "wqh3", (81, 32, 13, 12), 186624, [1, 3, 44], None),
    ("sp(4,4)", ("sp", "2", "4"), "wqh4", (85, 20, 3, 5), 1958400, [1, 2, 18], 460),
    ("haemers4-srg96", ("appendix", "haemers4-srg96"), "wqh4", (96, 19, 2, 4), 9216, [1, 3, 20], 180),
    ("gq(5,3)", ("gq53",), "wqh4", (96, 20, 4, 4), 138240, [1, 3, 16], 111),
]


@lru_cache(maxsize=None)
def seed(*args: str) -> Graph:
    return build_seed(*args)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_adjacency(n, lambda u, v: rng.random() < p)


def random_perm(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def pytest_collection_modifyitems(config, items):
    if not QUICK:
        return
    skip = pytest.mark.skip(reason="SRGSWITCH_QUICK=1 skips the long reproduction runs")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def planted_graph(rng: random.Random, n: int, ell: int = 2, p: float = 0.5) -> tuple[Graph, tuple, tuple]:
    """Random graph in which ``C1 = 0..ell-1`` and ``C2 = ell..2ell-1`` satisfy the
    GM (when ell = 2) and WQH conditions, up to random relabelling.

    Returns the graph and the relabelled blocks.
    """
    rows = [0] * n
    C1, C2 = list(range(ell)), list(range(ell, 2 * ell))

    def link(u, v):
        rows[u] |= 1 << v
        rows[v] |= 1 << u

    if rng.random() < 0.5:
        # perfect matching inside each block (even ell) plus a matching across
        if ell % 2 == 0:
            for blk in (C1, C2):
                for i in range(0, ell, 2):
                    link(blk[i], blk[i + 1])
        for a, b in zip(C1, C2):
            link(a, b)
    for x in range(2 * ell, n):
        kind = 1 if x == 2 * ell else rng.randrange(5)
        if kind == 1:
            seen = C1
        elif kind == 2:
            seen = C2
        elif kind == 3:
            seen = C1 + C2
        elif kind == 4:
            t = rng.randrange(1, ell + 1) if ell > 1 else 1
            seen = rng.sample(C1, t) + rng.sample(C2, t)
        else:
            seen = []
        for c in seen:
            link(x, c)
    for u in range(2 * ell, n):
        for v in range(u + 1, n):
            if rng.random() < p:
                link(u, v)
    perm = random_perm(rng, n)
    g = Graph(n, rows, check=False).relabel(perm)
    return g, tuple(sorted(perm[c] for c in C1)), tuple(sorted(perm[c] for c in C2))


# ----------------------------------------------------------------------
# per-criterion pass/fail summary for the acceptance suite
# ----------------------------------------------------------------------
_CRITERIA: dict[int, list[str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    rep = (yield).get_result()
    m = item.get_closest_marker("criterion")
    if m is None:
        return
    n = m.args[0]
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        outcome = "skipped" if rep.skipped else ("passed" if rep.passed else "failed")
        _CRITERIA.setdefault(n, []).append(outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        res = _CRITERIA[n]
        if "failed" in res:
            verdict = "FAIL"
        elif all(r == "skipped" for r in res):
            verdict = "SKIP"
        else:
            verdict = "PASS"
        tr.write_line(f"criterion {n:2d}: {verdict}  ({res.count('passed')}/{len(res)} checks passed)")
