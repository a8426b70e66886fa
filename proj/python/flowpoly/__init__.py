"""Exact flow polynomials of multigraphs, bounds on their coefficients and
exhaustive sweeps over cubic graphs."""

from ._flowpoly import (
    DomainError,
    Graph,
    InexactDivision,
    InvalidEdge,
    InvalidOperation,
    LimitExceeded,
    ParseError,
    audit,
    check,
    decompose,
    enumerate_cubic,
    family,
    family_names,
    flow,
    from_graph6,
    rational_roots,
    read_graphs,
    real_root_count,
    sweep,
    tau,
)

__all__ = [
    "DomainError",
    "Graph",
    "InexactDivision",
    "InvalidEdge",
    "InvalidOperation",
    "LimitExceeded",
    "ParseError",
    "audit",
    "check",
    "decompose",
    "enumerate_cubic",
    "family",
    "family_names",
    "flow",
    "from_graph6",
    "rational_roots",
    "read_graphs",
    "real_root_count",
    "sweep",
    "tau",
]
