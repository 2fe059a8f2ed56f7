from __future__ import annotations

import json
import random

import pytest

from conftest import seed
from srgswitch.canon import canonical_key
from srgswitch.explorer import (
    STATUS_CLOSURE,
    STATUS_DEPTH,
    STATUS_TRUNCATED,
    ConfigMismatchError,
    ExplorationConfig,
    ExplorationError,
    IntegrityError,
    KeyStore,
    SeedRejectedError,
    closure,
    expand,
    explore,
    format_partition,
    parse_partition,
    read_level,
    read_stats_csv,
    replay,
    resume,
)
from srgswitch.graph import Graph, parse_graph6, verify_srg
from srgswitch.switching import GmPartition, WqhPartition, apply_partition, enumerate_partitions

SP = ("sp", "3", "2")


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_c5_closes_immediately(tmp_path):
    st = closure(cycle(5), ExplorationConfig("gm4", out_dir=tmp_path))
    assert st.totals == [1] and st.status == STATUS_CLOSURE and st.closed
    assert read_stats_csv(tmp_path / "stats.csv")[0].total == 1


def test_seed_rejection(tmp_path):
    with pytest.raises(SeedRejectedError):
        explore(Graph.from_edges(5, [(0, 1)]), ExplorationConfig("gm4", 1))
    with pytest.raises(SeedRejectedError, match="degenerate"):
        explore(Graph.from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, 5)]), ExplorationConfig("gm4", 1))
    with pytest.raises(SeedRejectedError, match="degenerate"):
        explore(Graph(5, [0] * 5), ExplorationConfig("gm4", 1))


def test_config_validation():
    with pytest.raises(ValueError):
        ExplorationConfig("gm5")
    with pytest.raises(ValueError):
        ExplorationConfig("gm4", -1)
    with pytest.raises(ValueError):
        ExplorationConfig("gm4", 1, max_total=0)
    with pytest.raises(ValueError):
        ExplorationConfig("gm4", 1, workers=0)


def test_refuses_to_overwrite(tmp_path):
    explore(seed(*SP), ExplorationConfig("gm4", 0, out_dir=tmp_path))
    with pytest.raises(ExplorationError):
        explore(seed(*SP), ExplorationConfig("gm4", 0, out_dir=tmp_path))


def test_depth_zero_single_row(tmp_path):
    st = explore(seed(*SP), ExplorationConfig("gm4", 0, out_dir=tmp_path))
    assert st.totals == [1] and st.status == STATUS_DEPTH
    assert (tmp_path / "level-0.g6").read_bytes().strip() == canonical_key(seed(*SP))


def test_resume_from_level_one(tmp_path):
    st = explore(seed(*SP), ExplorationConfig("gm4", 1, out_dir=tmp_path))
    assert st.totals == [1, 3]
    st2 = resume(tmp_path, ExplorationConfig("gm4", 2))
    assert st2.totals == [1, 3, 55] and st2.news == [1, 2, 52]
    meta = json.loads((tmp_path / "meta.json").read_text())
    assert meta["levels"] == [[0, 1, 1], [1, 2, 3], [2, 52, 55]]
    assert [s.total for s in read_stats_csv(tmp_path / "stats.csv")] == [1, 3, 55]


def test_resume_matches_single_run(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    explore(seed("vno-", "4", "3"), ExplorationConfig("wqh3", 2, out_dir=a))
    explore(seed("vno-", "4", "3"), ExplorationConfig("wqh3", 1, out_dir=b))
    resume(b, ExplorationConfig("wqh3", 2))
    for j in range(3):
        assert (a / f"level-{j}.g6").read_bytes() == (b / f"level-{j}.g6").read_bytes()
        assert (a / f"level-{j}.prov").read_bytes() == (b / f"level-{j}.prov").read_bytes()


def test_resume_closed_run_is_a_no_op(tmp_path):
    closure(cycle(5), ExplorationConfig("gm4", out_dir=tmp_path))
    before = (tmp_path / "meta.json").read_bytes()
    st = resume(tmp_path)
    assert st.closed and st.totals == [1]
    assert (tmp_path / "meta.json").read_bytes() == before


def test_resume_refuses_other_switch(tmp_path):
    explore(seed(*SP), ExplorationConfig("gm4", 0, out_dir=tmp_path))
    with pytest.raises(ConfigMismatchError):
        resume(tmp_path, ExplorationConfig("wqh3", 1))


@pytest.mark.parametrize("damage", ["flip", "truncate", "delete", "meta"])
def test_corruption_detected(tmp_path, damage):
    explore(seed(*SP), ExplorationConfig("gm4", 1, out_dir=tmp_path))
    lv = tmp_path / "level-1.g6"
    if damage == "flip":
        data = bytearray(lv.read_bytes())
        data[3] ^= 1
        lv.write_bytes(bytes(data))
    elif damage == "truncate":
        lv.write_bytes(lv.read_bytes()[:-5])
    elif damage == "delete":
        lv.unlink()
    else:
        meta = json.loads((tmp_path / "meta.json").read_text())
        meta["seed_key"] = meta["seed_key"][:-1] + "?"
        (tmp_path / "meta.json").write_text(json.dumps(meta))
    with pytest.raises(IntegrityError):
        resume(tmp_path, ExplorationConfig("gm4", 2))


def test_garbled_meta(tmp_path):
    (tmp_path / "meta.json").write_text("{not json")
    with pytest.raises(IntegrityError):
        resume(tmp_path)
    with pytest.raises(IntegrityError):
        resume(tmp_path / "missing")


def test_truncation(tmp_path):
    st = explore(seed(*SP), ExplorationConfig("gm4", 3, max_total=20, out_dir=tmp_path))
    assert st.status == STATUS_TRUNCATED
    assert st.totals == [1, 3]
    assert not (tmp_path / "level-2.g6").exists()
    st2 = resume(tmp_path, ExplorationConfig("gm4", 2, max_total=100))
    assert st2.totals == [1, 3, 55] and st2.status == STATUS_DEPTH


def test_worker_count_does_not_change_output(tmp_path):
    for w in (1, 3):
        explore(seed("vno-", "4", "3"), ExplorationConfig("wqh3", 2, workers=w, out_dir=tmp_path / str(w)))
    for name in ("level-1.g6", "level-2.g6", "level-2.prov", "stats.csv"):
        assert (tmp_path / "1" / name).read_bytes() == (tmp_path / "3" / name).read_bytes()


def test_level_files_sorted_and_valid(tmp_path):
    explore(seed(*SP), ExplorationConfig("gm4", 2, out_dir=tmp_path))
    seen = set()
    for j in range(3):
        keys = read_level(tmp_path / f"level-{j}.g6")
        assert keys == sorted(keys)
        assert not seen & set(keys)
        seen |= set(keys)
        for k in keys[:5]:
            g = parse_graph6(k)
            assert verify_srg(g).as_tuple() == (63, 30, 13, 15)
            assert canonical_key(g) == k


def test_replay_reaches_stored_graph(tmp_path):
    explore(seed(*SP), ExplorationConfig("gm4", 2, out_dir=tmp_path))
    keys = read_level(tmp_path / "level-2.g6")
    for i in random.Random(1).sample(range(len(keys)), 4):
        path = replay(tmp_path, 2, i)
        assert len(path) == 3
        assert canonical_key(path[0]) == read_level(tmp_path / "level-0.g6")[0]
        assert canonical_key(path[-1]) == keys[i]


def test_expand_children_cover_all_partitions():
    g = seed("vno-", "4", "3")
    key = canonical_key(g)
    got = {k for k, _ in expand(key, "wqh3")}
    h = parse_graph6(key)
    want = {canonical_key(apply_partition(h, p)) for p in enumerate_partitions(h, "wqh3")}
    assert got == want


def test_partition_text_roundtrip():
    for p in (GmPartition((0, 3, 5, 9), (1,)), WqhPartition(2, (0, 4), (2, 7), (5,))):
        assert parse_partition(format_partition(p))[0] == (p.C if p.kind == "gm4" else p.C1)


def test_keystore(tmp_path):
    ks = KeyStore(None)
    ks.add_level(0, [b"abc", b"abd"], keep=True)
    assert b"abc" in ks and b"abe" not in ks and len(ks) == 2
    ks.add_level(1, [b"xyz"], keep=False)
    assert b"xyz" in ks and len(ks) == 3
    ks.close()


def test_keystore_reads_full_keys_from_disk_on_collision(tmp_path, monkeypatch):
    import srgswitch.explorer as ex

    monkeypatch.setattr(ex, "_digest", lambda key: 7)
    keys = [b"aaaa", b"aaab", b"bbbb"]
    (tmp_path / "level-0.g6").write_bytes(b"".join(k + b"\n" for k in keys))
    ks = KeyStore(tmp_path)
    ks.add_level(0, keys, keep=False)
    ks.release(0)
    assert all(k in ks for k in keys)
    assert b"aaac" not in ks
    ks.close()
