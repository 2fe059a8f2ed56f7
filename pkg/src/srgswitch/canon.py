"""Canonical forms and automorphism groups.

The canonical key of a graph is the graph6 encoding of its canonically
relabelled copy, so two graphs are isomorphic exactly when their keys are
equal.  Keys come from this package's own labeller and are not comparable
with keys produced by other tools.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

from . import _kernels
from .graph import Graph, emit_graph6


@dataclass(frozen=True)
class AutInfo:
    order: int
    generators: tuple[tuple[int, ...], ...]
    orbit_sizes: tuple[int, ...]


def canonical_form(g: Graph, backend: str | None = None) -> tuple[bytes, list[int]]:
    """``(key, perm)`` where ``g.relabel(perm)`` is the canonical graph."""
    lab, _, _ = _kernels.canon_label(g, backend)
    perm = [0] * g.n
    for i, v in enumerate(lab):
        perm[v] = i
    return emit_graph6(g.relabel(perm)), perm


def canonical_key(g: Graph, backend: str | None = None) -> bytes:
    return canonical_form(g, backend)[0]


def canonical_graph(g: Graph, backend: str | None = None) -> Graph:
    _, perm = canonical_form(g, backend)
    return g.relabel(perm)


def aut_group(g: Graph, backend: str | None = None) -> AutInfo:
    _, orbits, gens = _kernels.canon_label(g, backend)
    return AutInfo(prod(orbits), tuple(tuple(x) for x in gens), tuple(orbits))


def aut_group_order(g: Graph, backend: str | None = None) -> int:
    return aut_group(g, backend).order


def canonicalize(g: Graph, backend: str | None = None) -> tuple[bytes, AutInfo]:
    """Key and automorphism data from a single search."""
    lab, orbits, gens = _kernels.canon_label(g, backend)
    perm = [0] * g.n
    for i, v in enumerate(lab):
        perm[v] = i
    return emit_graph6(g.relabel(perm)), AutInfo(prod(orbits), tuple(tuple(x) for x in gens), tuple(orbits))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count() or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)
