from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from oracles import spectrum, srg_params, to_nx
from srgswitch.graph import (
    Eigenvalue,
    Graph,
    InfeasibleParametersError,
    MalformedHeaderError,
    NonPrintableByteError,
    SrgParams,
    TrailingDataError,
    TruncatedDataError,
    common_neighbors,
    emit_graph6,
    parse_graph6,
    read_graph6_lines,
    require_srg,
    srg_spectrum,
    verify_srg,
)
from conftest import random_graph


@st.composite
def graphs(draw, max_n=40):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, mask) if b])


def petersen():
    return Graph.from_edges(10, nx.petersen_graph().edges())


def test_constructor_validation():
    with pytest.raises(ValueError, match="loop"):
        Graph(2, [1, 0])
    with pytest.raises(ValueError, match="asymmetric"):
        Graph(2, [2, 0])
    with pytest.raises(ValueError, match="outside"):
        Graph(2, [4, 0])
    with pytest.raises(ValueError, match="expected 3 rows"):
        Graph(3, [0, 0])


def test_basic_queries():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.neighbors(1) == [0, 2]
    assert g.degrees() == [1, 2, 2, 1]
    assert sorted(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert g.edge_count() == 3
    assert g.complement().edge_count() == 3
    h = g.relabel([3, 2, 1, 0])
    assert sorted(h.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert g.induced([0, 1, 2]).edge_count() == 2
    assert Graph.from_matrix(g.to_matrix()) == g


@given(graphs())
def test_graph6_roundtrip(g):
    assert parse_graph6(emit_graph6(g)) == g


@given(graphs(max_n=70))
def test_graph6_matches_networkx_encoder(g):
    # networkx writes the same format; it is an independent encoder
    ref = nx.to_graph6_bytes(to_nx(g), header=False).strip()
    assert emit_graph6(g) == ref


def test_graph6_large_header():
    rng = random.Random(3)
    g = random_graph(rng, 70, 0.1)
    data = emit_graph6(g)
    assert data[0] == 126
    assert parse_graph6(data) == g


def test_graph6_header_and_newline_tolerated():
    g = petersen()
    assert parse_graph6(b">>graph6<<" + emit_graph6(g) + b"\n") == g
    assert parse_graph6(emit_graph6(g).decode()) == g
    assert list(read_graph6_lines([b">>graph6<<" + emit_graph6(g) + b"\n", b"\n", emit_graph6(g)])) == [g, g]


def test_graph6_known_strings():
    assert emit_graph6(Graph(0, [])) == b"?"
    assert emit_graph6(Graph.from_edges(2, [(0, 1)])) == b"A_"
    assert emit_graph6(petersen()) == b"IheA@GUAo"


@pytest.mark.parametrize(
    "data, exc, offset",
    [
        (b"", MalformedHeaderError, 0),
        (b"~?", MalformedHeaderError, 0),
        (b"~~??", MalformedHeaderError, 0),
        (b"~???", MalformedHeaderError, 0),
        (b"~??~", TruncatedDataError, 4),
        (b"C ", NonPrintableByteError, 1),
        (b"D\x01", NonPrintableByteError, 1),
        (b"I", TruncatedDataError, 1),
        (b"A_?", TrailingDataError, 2),
        (b"A`", TrailingDataError, 1),
    ],
)
def test_graph6_errors(data, exc, offset):
    with pytest.raises(exc) as info:
        parse_graph6(data)
    assert info.value.offset == offset


def test_verify_srg_petersen_and_errors():
    assert verify_srg(petersen()).as_tuple() == (10, 3, 0, 1)
    path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    r = verify_srg(path)
    assert not r and "irregular" in r.reason
    c6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    r = verify_srg(c6)
    assert not r and r.pair is not None
    k5 = Graph.from_edges(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    r = verify_srg(k5)
    assert not r and r.degenerate
    with pytest.raises(ValueError):
        verify_srg(Graph(2, [0, 0]))
    with pytest.raises(ValueError):
        require_srg(path)
    with pytest.raises(ValueError):
        common_neighbors(petersen(), 1, 1)


@given(st.integers(0, 2**32 - 1), st.integers(5, 18))
def test_verify_srg_agrees_with_matrix_oracle(s, n):
    g = random_graph(random.Random(s), n, 0.5)
    ours = verify_srg(g)
    ref = srg_params(g)
    if ours:
        assert ours.as_tuple() == ref
    elif not ours.degenerate:
        assert ref is None or None in ref[2:]


@pytest.mark.parametrize(
    "params, expected",
    [
        ((63, 30, 13, 15), (30, 3, 35, -5, 27)),
        ((10, 3, 0, 1), (3, 1, 5, -2, 4)),
        ((16, 6, 2, 2), (6, 2, 6, -2, 9)),
    ],
)
def test_spectrum_integral(params, expected):
    sp = srg_spectrum(SrgParams(*params))
    assert (sp.k, int(sp.r), sp.f, int(sp.s), sp.g) == expected


def test_spectrum_conference_and_errors():
    sp = srg_spectrum(SrgParams(13, 6, 2, 3))
    assert (sp.r, sp.s, sp.f, sp.g) == (Eigenvalue(-1, 1, 13), Eigenvalue(-1, -1, 13), 6, 6)
    assert abs(float(sp.r) - (-1 + 13 ** 0.5) / 2) < 1e-12
    assert str(sp.r) == "(-1+sqrt(13))/2"
    with pytest.raises(InfeasibleParametersError):
        srg_spectrum(SrgParams(10, 3, 1, 1))


def test_spectrum_matches_numpy_on_petersen():
    sp = srg_spectrum(verify_srg(petersen()))
    expected = sorted(float(e) for e, m in sp.eigenvalues() for _ in range(m))
    assert spectrum(petersen(), 6) == pytest.approx(expected)
