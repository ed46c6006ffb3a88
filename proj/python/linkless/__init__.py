"""Maximally linkless graphs: constructions, minor search and linking numbers."""

from ._core import (
    Graph,
    GraphError,
    ParseError,
    apex_stacked,
    build_family,
    build_g,
    canonical_embedding_g,
    complete_graph,
    count_report,
    find_minor,
    has_k6_minor,
    is_intrinsically_linked,
    isomorphic,
    linkless_report,
    reference_certificates_text,
    parse_graph,
    petersen_family,
    petersen_graph,
    validate_embedding,
    verify_certificates,
    verify_maximal,
)

__all__ = [
    "Graph",
    "GraphError",
    "ParseError",
    "apex_stacked",
    "build_family",
    "build_g",
    "canonical_embedding_g",
    "complete_graph",
    "count_report",
    "find_minor",
    "has_k6_minor",
    "is_intrinsically_linked",
    "isomorphic",
    "linkless_report",
    "reference_certificates_text",
    "parse_graph",
    "petersen_family",
    "petersen_graph",
    "validate_embedding",
    "verify_certificates",
    "verify_maximal",
]
