"""domprism: exact domination invariants of graphs, prisms and hypercubes."""
from __future__ import annotations

from domprism.domination import (
    brute_force_minimum,
    domination_number,
    DominationKind,
    doubling_construction,
    invariant,
    InvariantResult,
    paired_domination_number,
    total_domination_number,
    total_restrained_domination_number,
)
from domprism.errors import DomprismError
from domprism.graph import cartesian_product, Graph, make_graph, prism
from domprism.graph6 import encode_graph6, parse_graph6
from domprism.hypergraph import cnh, Hypergraph, onh
from domprism.transversal import transversal_number
from domprism.version import __version__
from domprism.vertexset import VertexSet

__all__ = [
    "__version__",
    "DominationKind",
    "DomprismError",
    "Graph",
    "Hypergraph",
    "InvariantResult",
    "VertexSet",
    "brute_force_minimum",
    "cartesian_product",
    "cnh",
    "domination_number",
    "doubling_construction",
    "encode_graph6",
    "invariant",
    "make_graph",
    "onh",
    "paired_domination_number",
    "parse_graph6",
    "prism",
    "total_domination_number",
    "total_restrained_domination_number",
    "transversal_number",
]
