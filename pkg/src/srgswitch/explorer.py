"""Breadth-first switching closure with an on-disk store of canonical keys.

Level ``j`` holds the graphs first reached after ``j`` switches.  Each level
is persisted as ``level-<j>.g6`` (sorted canonical keys, one per line) and
``level-<j>.prov`` (how each graph was reached from the previous level).
``meta.json`` carries the counters and a config hash so a run can be resumed.
"""
from __future__ import annotations

import csv
import hashlib
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .canon import canonical_key, canonicalize
from .graph import Graph, SrgParams, parse_graph6, verify_srg
from .switching import (
    SWITCH_KINDS,
    GmPartition,
    WqhPartition,
    enumerate_partitions,
    partition_key,
    permute_partition,
    switch_unchecked,
)

log = logging.getLogger(__name__)

FORMAT_VERSION = 1
DEFAULT_MAX_TOTAL = 10_000_000

STATUS_DEPTH = "depth-reached"
STATUS_CLOSURE = "closure"
STATUS_TRUNCATED = "truncated"


class ExplorationError(Exception):
    pass


class SeedRejectedError(ExplorationError):
    pass


class ConfigMismatchError(ExplorationError):
    pass


class IntegrityError(ExplorationError):
    def __init__(self, path, message: str):
        super().__init__(f"{path}: {message}")
        self.path = Path(path)


@dataclass
class ExplorationConfig:
    switch: str
    max_depth: int | None = None
    max_total: int = DEFAULT_MAX_TOTAL
    workers: int = 1
    out_dir: Path | str | None = None
    seed_label: str = ""

    def __post_init__(self):
        if self.switch not in SWITCH_KINDS:
            raise ValueError(f"unknown switch kind {self.switch!r}; choose from {SWITCH_KINDS}")
        if self.max_depth is not None and self.max_depth < 0:
            raise ValueError("max depth must be >= 0")
        if self.max_total < 1:
            raise ValueError("max total must be >= 1")
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")
        if self.out_dir is not None:
            self.out_dir = Path(self.out_dir)


@dataclass(frozen=True)
class LevelStats:
    depth: int
    new: int
    total: int


@dataclass
class ExplorationState:
    switch: str
    seed_key: bytes
    params: SrgParams
    levels: list[LevelStats] = field(default_factory=list)
    status: str = STATUS_DEPTH
    store: "KeyStore | None" = None
    frontier: list[bytes] = field(default_factory=list)

    @property
    def totals(self) -> list[int]:
        return [s.total for s in self.levels]

    @property
    def news(self) -> list[int]:
        return [s.new for s in self.levels]

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    @property
    def closed(self) -> bool:
        return self.status == STATUS_CLOSURE


def config_hash(switch: str, seed_key: bytes) -> str:
    h = hashlib.sha256()
    h.update(f"v{FORMAT_VERSION}|{switch}|".encode())
    h.update(seed_key)
    return h.hexdigest()[:16]


# ----------------------------------------------------------------------
# key store
# ----------------------------------------------------------------------
def _digest(key: bytes) -> int:
    return int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), "little")


class KeyStore:
    """Set of canonical keys indexed by 8-byte digests.

    Only digests and key locations stay in memory; a full key is fetched
    (from the level files, or from memory for unpersisted levels) when two
    digests collide.
    """

    def __init__(self, out_dir: Path | None = None):
        self.out_dir = out_dir
        self._index: dict[int, object] = {}
        self._levels: dict[int, list[bytes]] = {}
        self._handles: dict[int, object] = {}
        self._width = 0
        self._size = 0

    def __len__(self) -> int:
        return self._size

    def close(self) -> None:
        for fh in self._handles.values():
            fh.close()
        self._handles.clear()

    def _fetch(self, loc: tuple[int, int]) -> bytes:
        level, i = loc
        keys = self._levels.get(level)
        if keys is not None:
            return keys[i]
        # all keys of one run share a length, so line i sits at a fixed offset
        fh = self._handles.get(level)
        if fh is None:
            fh = self._handles[level] = open(self.out_dir / f"level-{level}.g6", "rb")
        fh.seek(i * (self._width + 1))
        return fh.read(self._width)

    def _locs(self, d: int) -> list[tuple[int, int]]:
        v = self._index.get(d)
        if v is None:
            return []
        return v if isinstance(v, list) else [v]

    def __contains__(self, key: bytes) -> bool:
        return any(self._fetch(loc) == key for loc in self._locs(_digest(key)))

    def add_level(self, level: int, keys: list[bytes], keep: bool) -> None:
        """Register the sorted, duplicate-free keys of one level."""
        for i, k in enumerate(keys):
            d = _digest(k)
            old = self._index.get(d)
            if old is None:
                self._index[d] = (level, i)
            elif isinstance(old, list):
                old.append((level, i))
            else:
                self._index[d] = [old, (level, i)]
        self._size += len(keys)
        if keys:
            self._width = len(keys[0])
        if keep or self.out_dir is None:
            self._levels[level] = keys

    def release(self, level: int) -> None:
        if self.out_dir is not None:
            self._levels.pop(level, None)


# ----------------------------------------------------------------------
# files
# ----------------------------------------------------------------------
def _atomic_write(path: Path, data: bytes) -> None:
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "wb") as fh:
        fh.write(data)
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def read_level(path: Path) -> list[bytes]:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise IntegrityError(path, f"cannot read level file ({e.strerror})") from e
    if data and not data.endswith(b"\n"):
        raise IntegrityError(path, "truncated level file (no final newline)")
    return data.split(b"\n")[:-1] if data else []


def format_partition(p) -> str:
    if isinstance(p, GmPartition):
        return ",".join(map(str, p.C))
    return ",".join(map(str, p.C1)) + "|" + ",".join(map(str, p.C2))


def parse_partition(text: str) -> tuple:
    if "|" in text:
        a, b = text.split("|")
        return tuple(int(v) for v in a.split(",")), tuple(int(v) for v in b.split(","))
    return (tuple(int(v) for v in text.split(",")),)


def write_stats_csv(path: Path, levels: list[LevelStats]) -> None:
    lines = ["depth,new,total"] + [f"{s.depth},{s.new},{s.total}" for s in levels]
    _atomic_write(path, ("\n".join(lines) + "\n").encode())


def read_stats_csv(path: Path) -> list[LevelStats]:
    with open(path, newline="") as fh:
        return [LevelStats(int(r["depth"]), int(r["new"]), int(r["total"])) for r in csv.DictReader(fh)]


# ----------------------------------------------------------------------
# expansion of one frontier graph
# ----------------------------------------------------------------------
def _orbit_representatives(parts: list, gens) -> list[int]:
    if not gens or len(parts) < 2:
        return list(range(len(parts)))
    where = {partition_key(p): i for i, p in enumerate(parts)}
    parent = list(range(len(parts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for gamma in gens:
        for i, p in enumerate(parts):
            j = where[partition_key(permute_partition(p, gamma))]
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [i for i in range(len(parts)) if find(i) == i]


def expand(key: bytes, switch: str) -> list[tuple[bytes, str]]:
    """Distinct children of a canonical graph as ``(child key, partition)``.

    Partitions are reduced to one per automorphism orbit before switching;
    each child is paired with the first representative (in enumeration
    order) that produces it.
    """
    g = parse_graph6(key)
    _, aut = canonicalize(g)
    parts = list(enumerate_partitions(g, switch))
    found: dict[bytes, str] = {}
    for i in _orbit_representatives(parts, aut.generators):
        ck = canonical_key(switch_unchecked(g, parts[i]))
        if ck not in found:
            found[ck] = format_partition(parts[i])
    return list(found.items())


def _expand_job(args):
    key, switch = args
    return expand(key, switch)


# ----------------------------------------------------------------------
# driver
# ----------------------------------------------------------------------
class _Run:
    def __init__(self, state: ExplorationState, cfg: ExplorationConfig):
        self.state = state
        self.cfg = cfg
        self.out = cfg.out_dir

    def meta(self) -> dict:
        s = self.state
        return {
            "format": FORMAT_VERSION,
            "switch": s.switch,
            "seed_key": s.seed_key.decode(),
            "seed_label": self.cfg.seed_label,
            "params": list(s.params.as_tuple()),
            "config_hash": config_hash(s.switch, s.seed_key),
            "levels": [[x.depth, x.new, x.total] for x in s.levels],
            "level_sha256": self.level_hashes,
            "status": s.status,
            "max_total": self.cfg.max_total,
        }

    def save(self) -> None:
        if self.out is None:
            return
        _atomic_write(self.out / "meta.json", (json.dumps(self.meta(), indent=1) + "\n").encode())
        write_stats_csv(self.out / "stats.csv", self.state.levels)

    def persist_level(self, j: int, keys: list[bytes], prov: list[str]) -> None:
        if self.out is None:
            return
        data = b"".join(k + b"\n" for k in keys)
        _atomic_write(self.out / f"level-{j}.prov", "".join(p + "\n" for p in prov).encode())
        _atomic_write(self.out / f"level-{j}.g6", data)
        self.level_hashes.append(hashlib.sha256(data).hexdigest())

    def children(self, frontier: list[bytes]):
        jobs = [(k, self.state.switch) for k in frontier]
        if self.cfg.workers > 1 and len(jobs) > 1:
            chunk = max(1, len(jobs) // (4 * self.cfg.workers))
            with ProcessPoolExecutor(self.cfg.workers) as ex:
                yield from ex.map(_expand_job, jobs, chunksize=chunk)
        else:
            for job in jobs:
                yield _expand_job(job)

    def loop(self) -> ExplorationState:
        s, cfg = self.state, self.cfg
        while True:
            j = s.depth + 1
            if cfg.max_depth is not None and j > cfg.max_depth:
                s.status = STATUS_DEPTH
                break
            new: dict[bytes, str] = {}
            truncated = False
            for pi, kids in enumerate(self.children(s.frontier)):
                for ck, part in kids:
                    if ck in new or ck in s.store:
                        continue
                    new[ck] = f"{pi} {part}"
                    if len(s.store) + len(new) > cfg.max_total:
                        truncated = True
                        break
                if truncated:
                    break
            if truncated:
                # never persist a level whose New count would be understated
                s.status = STATUS_TRUNCATED
                log.info("level %d truncated at max total %d", j, cfg.max_total)
                break
            if not new:
                s.status = STATUS_CLOSURE
                break
            keys = sorted(new)
            prov = [f"{i} {new[k]}" for i, k in enumerate(keys)]
            self.persist_level(j, keys, prov)
            s.store.add_level(j, keys, keep=True)
            s.store.release(j - 1)
            s.frontier = keys
            s.levels.append(LevelStats(j, len(keys), s.levels[-1].total + len(keys)))
            log.info("level %d: new %d total %d", j, len(keys), s.levels[-1].total)
            self.save()
        self.save()
        s.store.close()
        return s


def explore(seed: Graph, cfg: ExplorationConfig) -> ExplorationState:
    """Run the level loop from ``seed`` until the depth bound, closure or the graph limit."""
    params = verify_srg(seed)
    if not params and getattr(params, "degenerate", False):
        raise SeedRejectedError("seed is a degenerate (complete or empty) graph")
    if not params:
        raise SeedRejectedError(f"seed is not a strongly regular graph: {params.reason}")
    if params.k in (0, seed.n - 1):
        raise SeedRejectedError("seed is a degenerate (complete or empty) graph")
    out = cfg.out_dir
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        if (out / "meta.json").exists():
            raise ExplorationError(f"{out} already holds a run; use resume")
    key = canonical_key(seed)
    store = KeyStore(out)
    state = ExplorationState(cfg.switch, key, params, [LevelStats(0, 1, 1)], STATUS_DEPTH, store, [key])
    run = _Run(state, cfg)
    run.level_hashes = []
    run.persist_level(0, [key], [f"0 - seed {cfg.seed_label}".rstrip()])
    store.add_level(0, [key], keep=True)
    run.save()
    return run.loop()


def closure(seed: Graph, cfg: ExplorationConfig) -> ExplorationState:
    cfg.max_depth = None
    return explore(seed, cfg)


def load_meta(out_dir: Path | str) -> dict:
    path = Path(out_dir) / "meta.json"
    try:
        return json.loads(path.read_text())
    except OSError as e:
        raise IntegrityError(path, f"cannot read metadata ({e.strerror})") from e
    except ValueError as e:
        raise IntegrityError(path, f"corrupt metadata ({e})") from e


def resume(out_dir: Path | str, cfg: ExplorationConfig | None = None) -> ExplorationState:
    """Continue a checkpointed run from its last complete level.

    ``cfg`` may raise the depth bound or the graph limit; its switch kind must
    match the stored run.
    """
    out = Path(out_dir)
    meta = load_meta(out)
    try:
        switch = meta["switch"]
        seed_key = meta["seed_key"].encode()
        levels = [LevelStats(*x) for x in meta["levels"]]
        hashes = list(meta["level_sha256"])
    except (KeyError, TypeError) as e:
        raise IntegrityError(out / "meta.json", f"missing field {e}") from e
    if meta.get("format") != FORMAT_VERSION:
        raise ConfigMismatchError(f"unsupported checkpoint format {meta.get('format')}")
    if meta.get("config_hash") != config_hash(switch, seed_key):
        raise IntegrityError(out / "meta.json", "config hash does not match the stored seed and switch")
    if cfg is None:
        cfg = ExplorationConfig(switch, None, meta.get("max_total", DEFAULT_MAX_TOTAL), 1, out, meta.get("seed_label", ""))
    if cfg.switch != switch:
        raise ConfigMismatchError(f"checkpoint uses {switch}, config asks for {cfg.switch}")
    cfg.out_dir = out
    if len(hashes) != len(levels):
        raise IntegrityError(out / "meta.json", "level hash list does not match the counters")

    store = KeyStore(out)
    keys: list[bytes] = []
    for st, digest in zip(levels, hashes):
        path = out / f"level-{st.depth}.g6"
        data = path.read_bytes() if path.exists() else None
        if data is None:
            raise IntegrityError(path, "missing level file")
        if hashlib.sha256(data).hexdigest() != digest:
            raise IntegrityError(path, "checksum mismatch (corrupt or partial level)")
        keys = read_level(path)
        if len(keys) != st.new:
            raise IntegrityError(path, f"expected {st.new} keys, found {len(keys)}")
        store.add_level(st.depth, keys, keep=False)
    store._levels[levels[-1].depth] = keys
    params = SrgParams(*meta["params"])
    state = ExplorationState(switch, seed_key, params, levels, meta.get("status", STATUS_DEPTH), store, keys)
    run = _Run(state, cfg)
    run.level_hashes = hashes
    if state.status == STATUS_CLOSURE:
        return state
    state.status = STATUS_DEPTH
    return run.loop()


def replay(out_dir: Path | str, depth: int, index: int) -> list[Graph]:
    """Rebuild the switching path from the seed to a stored graph via provenance."""
    from .switching import apply_gm, apply_wqh, classify_gm, classify_wqh

    out = Path(out_dir)
    chain = []
    j, i = depth, index
    while j > 0:
        lines = (out / f"level-{j}.prov").read_text().splitlines()
        child, parent, part = lines[i].split(" ", 2)
        if int(child) != i:
            raise IntegrityError(out / f"level-{j}.prov", f"line {i + 1} names child {child}")
        chain.append((j, int(parent), parse_partition(part)))
        j, i = j - 1, int(parent)
    graphs = [parse_graph6(read_level(out / "level-0.g6")[0])]
    for j, parent, part in reversed(chain):
        g = parse_graph6(read_level(out / f"level-{j - 1}.g6")[parent])
        p = classify_gm(g, part[0]) if len(part) == 1 else classify_wqh(g, *part)
        if not p:
            raise IntegrityError(out / f"level-{j}.prov", f"logged partition is invalid: {p.reason}")
        graphs.append(apply_gm(g, p) if len(part) == 1 else apply_wqh(g, p))
    return graphs
