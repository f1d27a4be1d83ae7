"""Exact robust colouring parameters (chi1, alpha1, omega1) with certificates."""

from .errors import (
    DomainError,
    GraphInputError,
    ParseError,
    RobustColError,
    SizeLimitError,
)
from .graph import Graph, Selection, build_graph
from .oracle import (
    RobustColoringCertificate,
    RobustIndependenceCertificate,
    alpha1_exact,
    chi1_exact,
    omega1_exact,
    verify_robust_coloring,
    verify_robust_independent,
)

__all__ = [
    "DomainError",
    "Graph",
    "GraphInputError",
    "ParseError",
    "RobustColError",
    "RobustColoringCertificate",
    "RobustIndependenceCertificate",
    "Selection",
    "SizeLimitError",
    "alpha1_exact",
    "build_graph",
    "chi1_exact",
    "omega1_exact",
    "verify_robust_coloring",
    "verify_robust_independent",
]
