from __future__ import annotations

from itertools import product

import pytest

from conftest import SEEDS, seed
from oracles import srg_params
from srgswitch.canon import aut_group_order
from srgswitch.fields import UnsupportedFieldError, field
from srgswitch.graph import parse_graph6, emit_graph6, verify_srg
from srgswitch.seeds import (
    TripleSystem,
    TripleSystemError,
    affine_orthogonal_graph,
    affine_plane_3,
    build_seed,
    cyclic_sts19,
    diagonal_form,
    fano_plane,
    gq53_lines,
    load_appendix_seed,
    sp_graph,
    sts_block_graph,
    vno_graph,
)
from srgswitch._appendix import APPENDIX_SEEDS


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_field_axioms(q):
    F = field(q)
    E = range(q)
    for a, b, c in product(E, E, E):
        assert F.add[a][F.add[b][c]] == F.add[F.add[a][b]][c]
        assert F.mul[a][F.mul[b][c]] == F.mul[F.mul[a][b]][c]
        assert F.mul[a][F.add[b][c]] == F.add[F.mul[a][b]][F.mul[a][c]]
    for a in E:
        assert F.add[a][F.neg[a]] == 0
        if a:
            assert F.mul[a][F.inv[a]] == 1
    assert sum(1 for a, b in product(E, E) if F.mul[a][b] == 0) == 2 * q - 1


def test_gf4_is_not_z4():
    F = field(4)
    assert F.add[1][1] == 0
    assert F.mul[2][2] == 3  # w^2 = w + 1
    with pytest.raises(UnsupportedFieldError):
        field(6)


@pytest.mark.parametrize("label, args, kind, params, aut, totals, deep", SEEDS)
def test_seed_parameters(label, args, kind, params, aut, totals, deep):
    g = seed(*args)
    assert verify_srg(g).as_tuple() == params
    assert srg_params(g) == params


def test_vno_level_sets_per_form():
    # the sum of four squares over GF(3) gives 24 neighbours, x1^2-x2^2+x3^2+x4^2 gives 30
    assert verify_srg(affine_orthogonal_graph(diagonal_form([1, 1, 1, 1]), 3, 1)).as_tuple() == (81, 24, 9, 6)
    assert verify_srg(affine_orthogonal_graph(diagonal_form([1, 2, 1, 1]), 3, 1)).as_tuple() == (81, 30, 9, 12)
    assert verify_srg(vno_graph(+1)).as_tuple() == (81, 24, 9, 6)
    assert verify_srg(vno_graph(-1)).as_tuple() == (81, 30, 9, 12)


def test_affine_orthogonal_errors():
    with pytest.raises(ValueError):
        affine_orthogonal_graph(diagonal_form([1, 1]), 3, 5)
    with pytest.raises(ValueError):
        vno_graph(+1, 4, 4)


@pytest.mark.parametrize(
    "args, params",
    [
        (("sp", "2", "2"), (15, 6, 1, 3)),
        (("bilin", "2", "5"), (64, 21, 8, 6)),
        (("bilin", "2", "4"), (16, 9, 4, 6)),
        (("vo+", "3", "2"), (64, 35, 18, 20)),
        (("vo-", "2", "3"), (81, 20, 1, 6)),
    ],
)
def test_other_constructors(args, params):
    assert verify_srg(build_seed(*args)).as_tuple() == params


def test_gq53_structure():
    lines, through = gq53_lines()
    assert len(lines) == 96
    assert all(len(L) == 4 for L in lines)
    assert all(len(t) == 6 for t in through)


def test_appendix_roundtrip():
    for name, (params, text) in APPENDIX_SEEDS.items():
        g = load_appendix_seed(name)
        assert verify_srg(g).as_tuple() == params
        assert emit_graph6(g) == text
        assert parse_graph6(emit_graph6(g)) == g
    with pytest.raises(KeyError):
        load_appendix_seed("nope")


def test_triple_systems():
    assert verify_srg(sts_block_graph(cyclic_sts19())).as_tuple() == (57, 24, 11, 9)
    assert verify_srg(sts_block_graph(affine_plane_3())).as_tuple() == (12, 9, 6, 9)
    r = verify_srg(sts_block_graph(fano_plane()))
    assert not r and r.degenerate
    ts = TripleSystem.parse(cyclic_sts19().dumps())
    assert len(ts.blocks) == 57
    with pytest.raises(TripleSystemError, match="lies in blocks"):
        TripleSystem(7, [(0, 1, 2), (0, 1, 3)])
    with pytest.raises(TripleSystemError, match="not covered"):
        TripleSystem(7, [(0, 1, 2)])
    with pytest.raises(TripleSystemError, match="3-subset"):
        TripleSystem(7, [(0, 0, 1)])


def test_sts_from_file(tmp_path):
    p = tmp_path / "sts19.txt"
    p.write_text("# cyclic\n" + cyclic_sts19().dumps())
    assert verify_srg(build_seed("sts", str(p))).as_tuple() == (57, 24, 11, 9)


def test_build_seed_errors():
    with pytest.raises(KeyError):
        build_seed("nope")
    with pytest.raises(ValueError, match="usage"):
        build_seed("sp", "3")


def test_small_aut_orders():
    assert aut_group_order(sp_graph(2, 2)) == 720
    assert aut_group_order(build_seed("bilin", "2", "4")) == 1152
    assert aut_group_order(sts_block_graph(affine_plane_3())) == 31104
