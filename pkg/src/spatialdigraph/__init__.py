"""Exact tools for directed cycles, links and knots in spatial digraphs."""

from __future__ import annotations

__version__ = "0.1.0"

from .digraph import (
    Arc,
    Cycle,
    CycleLimitError,
    Digraph,
    GraphError,
    GraphFormatError,
    directed_cycles,
    symmetric_double,
    undirected_cycles,
)
from .embedding import (
    CrossingForm,
    EmbeddingError,
    KnotCertificate,
    PLEmbedding,
    contract_path_embedding,
    double_embedding,
    knot_certificate,
    linking_number,
    spatial_realize,
)
from .census import CensusReport, Link, knot_census, link_census, repair_cycle, verify_doubling_counts
from .minors import (
    MinorCheck,
    MinorWitness,
    Partition,
    check_minor_witness,
    consistent_contract,
    density_certificate,
    vertex_expand,
)

__all__ = [
    "Arc", "CensusReport", "CrossingForm", "Cycle", "CycleLimitError", "Digraph", "EmbeddingError",
    "GraphError", "GraphFormatError", "KnotCertificate", "Link", "MinorCheck", "MinorWitness",
    "PLEmbedding", "Partition", "__version__", "check_minor_witness", "consistent_contract",
    "contract_path_embedding", "density_certificate", "directed_cycles", "double_embedding",
    "knot_census", "knot_certificate", "link_census", "linking_number", "repair_cycle",
    "spatial_realize", "symmetric_double", "undirected_cycles", "verify_doubling_counts",
    "vertex_expand",
]
