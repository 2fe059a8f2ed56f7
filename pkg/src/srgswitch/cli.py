"""Command-line interface: ``srgswitch seed | explore | analyze``."""
from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from . import analyze as an
from .canon import aut_group_order
from .explorer import (
    STATUS_TRUNCATED,
    ConfigMismatchError,
    ExplorationConfig,
    ExplorationError,
    IntegrityError,
    SeedRejectedError,
    config_hash,
    explore,
    resume,
)
from .graph import Graph6Error, emit_graph6, parse_graph6, verify_srg
from .seeds import SEED_BUILDERS, build_seed
from .switching import SWITCH_KINDS

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_TRUNCATED = 3
EXIT_REFUSED = 4
EXIT_IO = 5

OUT_ENV = "SRGSWITCH_OUT"

log = logging.getLogger("srgswitch")


class Refused(Exception):
    pass


@dataclass
class RunManifest:
    command: str
    config_hash: str
    seed: dict
    version: str = __version__
    wall_clock_s: float = 0.0
    started: str = ""
    counters: dict = field(default_factory=dict)

    def write(self, out: Path) -> None:
        path = out / "manifest.json"
        path.write_text(json.dumps(asdict(self), indent=1) + "\n")


# ----------------------------------------------------------------------
# helpers
# ----------------------------------------------------------------------
def _load_seed(spec: list[str] | None, path: str | None):
    """``(graph, identity)`` from a constructor spec or a graph6 file."""
    if path is not None:
        try:
            data = Path(path).read_bytes()
        except OSError as e:
            raise OSError(f"{path}: {e.strerror}") from e
        lines = [ln for ln in data.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise Refused(f"{path}: expected exactly one graph6 line, found {len(lines)}")
        try:
            g = parse_graph6(lines[0])
        except Graph6Error as e:
            raise Refused(f"{path}: {e}") from e
        return g, {"file": str(path), "sha256": hashlib.sha256(data).hexdigest()}
    name, *args = spec
    try:
        g = build_seed(name, *args)
    except (KeyError, ValueError) as e:
        raise Refused(str(e).strip("'\"")) from e
    return g, {"constructor": name, "args": args}


def _require_srg(g):
    p = verify_srg(g)
    if not p and getattr(p, "degenerate", False):
        raise Refused("degenerate graph (complete or empty)")
    if not p:
        raise Refused(f"not a strongly regular graph: {p.reason}")
    if p.k in (0, g.n - 1):
        raise Refused(f"degenerate SRG{p.as_tuple()} (complete or empty graph)")
    return p


def _identity_label(ident: dict) -> str:
    if "constructor" in ident:
        return " ".join([ident["constructor"], *ident["args"]])
    return f"file:{ident['sha256'][:12]}"


def counts_table(switch: str, levels) -> str:
    """New/Total with the number of switchings across the columns."""
    head = "GM" if switch == "gm4" else f"WQH{switch[3:]}"
    cols = [[head, "New", "Total"]] + [[str(s.depth), str(s.new), str(s.total)] for s in levels]
    widths = [max(len(x) for x in c) for c in cols]
    return "\n".join(" ".join(c[r].rjust(w) if i else c[r].ljust(w) for i, (c, w) in enumerate(zip(cols, widths)))
                     for r in range(3))


# ----------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------
def cmd_seed(args) -> int:
    g, _ = _load_seed(args.name or None, args.from_file)
    p = _require_srg(g)
    sys.stdout.write(emit_graph6(g).decode() + "\n")
    print(f"SRG{p.as_tuple()} aut {aut_group_order(g)}", file=sys.stderr)
    return EXIT_OK


def _default_out(label: str, switch: str) -> Path:
    base = Path(os.environ.get(OUT_ENV, "srgswitch-runs"))
    slug = "".join(ch if ch.isalnum() or ch in "+-." else "_" for ch in label)
    return base / f"{slug}-{switch}"


def cmd_explore(args) -> int:
    t0 = time.time()
    started = time.strftime("%Y-%m-%dT%H:%M:%S")
    depth = None if args.closure else args.depth
    if args.resume:
        out = Path(args.resume)
        from .explorer import load_meta

        meta = load_meta(out)
        switch = args.switch or meta["switch"]
        cfg = ExplorationConfig(switch, depth, args.max_graphs, args.workers, out, meta.get("seed_label", ""))
        state = resume(out, cfg)
        ident = json.loads((out / "manifest.json").read_text())["seed"] if (out / "manifest.json").exists() else {}
    else:
        if not args.seed and not args.seed_file:
            raise Refused("give --seed NAME ARGS..., --seed-file PATH or --resume DIR")
        if not args.switch:
            raise Refused("--switch is required")
        g, ident = _load_seed(args.seed, args.seed_file)
        _require_srg(g)
        label = _identity_label(ident)
        out = Path(args.out) if args.out else _default_out(label, args.switch)
        cfg = ExplorationConfig(args.switch, depth, args.max_graphs, args.workers, out, label)
        state = explore(g, cfg)
    man = RunManifest(
        command=" ".join(["srgswitch"] + sys.argv[1:]) if sys.argv[1:] else "srgswitch explore",
        config_hash=config_hash(state.switch, state.seed_key),
        seed=ident,
        wall_clock_s=round(time.time() - t0, 3),
        started=started,
        counters={"levels": [[s.depth, s.new, s.total] for s in state.levels], "status": state.status},
    )
    man.write(out)
    print(counts_table(state.switch, state.levels))
    print(f"status: {state.status}; stats: {out / 'stats.csv'}", file=sys.stderr)
    return EXIT_TRUNCATED if state.status == STATUS_TRUNCATED else EXIT_OK


def _report(store: str, spec: list[str], complement: bool, cap: int) -> str:
    kind, *rest = spec
    nums = []
    for x in rest:
        try:
            nums.append(int(x))
        except ValueError:
            raise Refused(f"report argument {x!r} is not an integer") from None
    need = {"aut": 0, "cliques": 1, "cocliques": 1, "packing": 1, "pg": 3, "ramsey": 2}
    if kind not in need:
        raise Refused(f"unknown report {kind!r}; choose from {', '.join(need)}")
    if len(nums) != need[kind]:
        raise Refused(f"report {kind} takes {need[kind]} integer argument(s)")
    if kind == "aut":
        return an.value_counts_csv(an.aut_histogram(store), ("aut_order", "count"))
    if kind in ("cliques", "cocliques"):
        counts = an.clique_census(store, nums[0], complement=(kind == "cocliques"))
        return an.value_counts_csv(counts, (f"{kind[:-1]}s_{nums[0]}", "count"))
    if kind == "packing":
        return an.value_counts_csv(an.packing_census(store, nums[0], complement, cap), (f"packing_{nums[0]}", "count"))
    if kind == "pg":
        rows = an.geometry_census(store, *nums, use_complement=complement)
        found = sum(1 for _, f in rows if f)
        return "index,geometry\n" + "".join(f"{i},{int(f)}\n" for i, f in rows) + f"# found,{found}\n"
    rows = an.ramsey_census(store, *nums)
    return "index,witness\n" + "".join(f"{i},{int(w)}\n" for i, w in rows)


def cmd_analyze(args) -> int:
    text = _report(args.store, args.report, args.complement, args.cap)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ----------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="srgswitch", description="Generate strongly regular graphs by switching.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress per level")
    sub = ap.add_subparsers(dest="command", required=True)

    names = "\n".join(f"  {usage}" for _, _, usage in SEED_BUILDERS.values())
    sp = sub.add_parser("seed", help="print a seed graph as graph6", epilog="seeds:\n" + names,
                        formatter_class=argparse.RawDescriptionHelpFormatter)
    sp.add_argument("name", nargs="*", help="constructor name and parameters")
    sp.add_argument("--from-file", metavar="PATH", help="read the seed from a graph6 file")
    sp.set_defaults(func=cmd_seed)

    ep = sub.add_parser("explore", help="breadth-first switching exploration")
    src = ep.add_mutually_exclusive_group()
    src.add_argument("--seed", nargs="+", metavar="ARG", help="constructor name and parameters")
    src.add_argument("--seed-file", metavar="PATH", help="graph6 file holding the seed")
    src.add_argument("--resume", metavar="DIR", help="continue a checkpointed run")
    ep.add_argument("--switch", choices=SWITCH_KINDS)
    lim = ep.add_mutually_exclusive_group()
    lim.add_argument("--depth", type=int, default=None, help="maximum number of switchings")
    lim.add_argument("--closure", action="store_true", help="run until no new graphs appear")
    ep.add_argument("--max-graphs", type=int, default=10_000_000, help="stop (truncated) beyond this many graphs")
    ep.add_argument("--workers", type=int, default=1)
    ep.add_argument("--out", metavar="DIR", help=f"checkpoint directory (default: ${OUT_ENV} or ./srgswitch-runs)")
    ep.set_defaults(func=cmd_explore)

    ap_an = sub.add_parser("analyze", help="reports over a store of graph6 files")
    ap_an.add_argument("--store", required=True, help="run directory or graph6 file")
    ap_an.add_argument("--report", nargs="+", required=True, metavar="ARG",
                       help="aut | cliques S | cocliques S | packing S | pg S T A | ramsey A B")
    ap_an.add_argument("--complement", action="store_true", help="packing/pg on the complement")
    ap_an.add_argument("--cap", type=int, default=an.DEFAULT_PACKING_CAP, help="clique cap for packings")
    ap_an.add_argument("--output", metavar="FILE", help="write the CSV here instead of stdout")
    ap_an.set_defaults(func=cmd_analyze)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(asctime)s %(name)s: %(message)s")
    if args.command == "explore" and not args.resume and args.depth is None and not args.closure:
        ap.error("explore needs --depth N or --closure")
    if args.command == "seed" and bool(args.name) == bool(args.from_file):
        ap.error("seed needs either a constructor name or --from-file")
    try:
        return args.func(args)
    except (Refused, SeedRejectedError, ConfigMismatchError) as e:
        print(f"srgswitch: refused: {e}", file=sys.stderr)
        return EXIT_REFUSED
    except (IntegrityError, an.StoreError, OSError) as e:
        print(f"srgswitch: error: {e}", file=sys.stderr)
        return EXIT_IO
    except (ExplorationError, an.NotApplicableError, ValueError) as e:
        print(f"srgswitch: refused: {e}", file=sys.stderr)
        return EXIT_REFUSED


if __name__ == "__main__":
    sys.exit(main())
