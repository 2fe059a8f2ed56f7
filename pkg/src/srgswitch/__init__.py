"""Strongly regular graphs from Godsil-McKay and Wang-Qiu-Hu switching."""
from __future__ import annotations

__version__ = "0.1.0"

from .canon import aut_group_order, canonical_form, canonical_key
from .explorer import ExplorationConfig, closure, explore, resume
from .graph import Graph, SrgParams, emit_graph6, parse_graph6, srg_spectrum, verify_srg
from .seeds import build_seed
from .switching import (
    apply_gm,
    apply_wqh,
    classify_gm,
    classify_wqh,
    enumerate_gm_partitions,
    enumerate_wqh_partitions,
)

__all__ = [
    "Graph", "SrgParams", "parse_graph6", "emit_graph6", "verify_srg", "srg_spectrum",
    "build_seed", "classify_gm", "classify_wqh", "enumerate_gm_partitions",
    "enumerate_wqh_partitions", "apply_gm", "apply_wqh", "canonical_form", "canonical_key",
    "aut_group_order", "ExplorationConfig", "explore", "resume", "closure",
]
