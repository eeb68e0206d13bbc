"""Spanning tree + matching + 2-regular decompositions of claw-free cubic graphs."""

from .certificate import Decomposition, certificate_from_json, to_dot
from .decompose import (
    ReducedGraph,
    ReductionStep,
    apply_reduction,
    decompose,
    decompose_base,
    decompose_capped,
    lift,
    select_reduction,
)
from .graph import Graph, bridges, components, edge, from_graph6, to_graph6
from .oracle import OracleResult, complement_ok, oracle_decompose, spanning_trees
from .recognition import (
    DegreeClass,
    Diamond,
    DiamondString,
    StringConfig,
    Triangle,
    UnitPartition,
    classify_degrees,
    find_claw,
    find_diamond_strings,
    unit_multigraph,
    unit_partition,
)
from .reroute import reroute_cycle
from .verify import VerificationReport, lemma2_check, verify

__all__ = [
    "DegreeClass",
    "Decomposition",
    "Diamond",
    "DiamondString",
    "Graph",
    "OracleResult",
    "ReducedGraph",
    "ReductionStep",
    "StringConfig",
    "Triangle",
    "UnitPartition",
    "VerificationReport",
    "apply_reduction",
    "bridges",
    "certificate_from_json",
    "classify_degrees",
    "complement_ok",
    "components",
    "decompose",
    "decompose_base",
    "decompose_capped",
    "edge",
    "find_claw",
    "find_diamond_strings",
    "from_graph6",
    "lemma2_check",
    "lift",
    "oracle_decompose",
    "reroute_cycle",
    "select_reduction",
    "spanning_trees",
    "to_dot",
    "to_graph6",
    "unit_multigraph",
    "unit_partition",
    "verify",
]
