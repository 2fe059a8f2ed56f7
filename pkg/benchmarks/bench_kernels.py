"""Compare the compiled kernels against the pure-Python reference.

    python3 benchmarks/bench_kernels.py [--repeat N] [--quick]

Each row times one kernel workload on one seed with both backends, checks the
outputs agree, and prints the speedup.
"""
from __future__ import annotations

import argparse
import random
import sys
import time

from srgswitch import _kernels
from srgswitch.seeds import build_seed
from srgswitch.switching import enumerate_gm_partitions, switch_unchecked


def _time(fn, repeat: int):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def workloads(quick: bool):
    sp = build_seed("sp", "3", "2")
    vno = build_seed("vno-", "4", "3")
    gq = build_seed("gq53")
    mates = [switch_unchecked(sp, p) for p in random.Random(7).sample(list(enumerate_gm_partitions(sp, first=[0])), 5)]
    yield "canon sp(6,2)", lambda b: _kernels.canon_label(sp, b)
    yield "canon 5 GM mates of sp(6,2)", lambda b: [_kernels.canon_label(h, b) for h in mates]
    yield "canon gq(5,3)", lambda b: _kernels.canon_label(gq, b)
    yield "gm 4-sets sp(6,2), c1<4", lambda b: [_kernels.gm_block(sp, c, b) for c in range(4)]
    yield "wqh3 vno-(4,3), x=0", lambda b: _kernels.wqh_block(vno, 3, 0, b)
    if not quick:
        yield "gm 4-sets sp(6,2), all", lambda b: [_kernels.gm_block(sp, c, b) for c in range(sp.n)]
        yield "wqh4 gq(5,3), x=0", lambda b: _kernels.wqh_block(gq, 4, 0, b)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the slow pure-Python rows")
    args = ap.parse_args(argv)
    if not _kernels.native_available():
        print("native kernels are not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    print(f"{'workload':34} {'pure s':>9} {'native s':>9} {'speedup':>8}  same")
    for name, fn in workloads(args.quick):
        tp, op = _time(lambda: fn("pure"), max(1, args.repeat // 2))
        tn, on = _time(lambda: fn("native"), args.repeat)
        print(f"{name:34} {tp:9.4f} {tn:9.4f} {tp / max(tn, 1e-9):8.1f}  {op == on}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
