"""Simple-triangle graph and linear-interval order recognition."""

from ._simtri import (
    Error,
    Graph,
    PartialOrder,
    build_interval_representation,
    check_apex_ordering,
    complement,
    emit_representation,
    find_apex_obstruction,
    parse_graph,
    parse_order,
    realize,
    recognize,
    recognize_linear_interval_order,
    verify_representation,
)

__all__ = [
    "Error",
    "Graph",
    "PartialOrder",
    "build_interval_representation",
    "check_apex_ordering",
    "complement",
    "emit_representation",
    "find_apex_obstruction",
    "parse_graph",
    "parse_order",
    "realize",
    "recognize",
    "recognize_linear_interval_order",
    "verify_representation",
]
