"""divgraph: analysis of the proper divisor graph of a composite integer.

Vertices are the divisors d with 1 < d < n; u and v are adjacent exactly
when n divides u*v. The package computes every standard parameter of this
graph in closed form from the factorization, constructs optimal vertex and
edge colorings and the full automorphism group, and checks everything
against exact brute-force oracles on the explicit graph.
"""

from .arith import (
    Factorization,
    factorize,
    proper_divisor_count,
    proper_divisors,
    similar,
)
from .automorphisms import (
    AutGroup,
    Automorphism,
    SpecialCase,
    aut_structure,
    enumerate_automorphisms,
    generating_set,
)
from .coloring import (
    EdgeColoring,
    EdgeType,
    VertexColoring,
    edge_coloring,
    edge_coloring_prime_power,
    edge_coloring_squarefree,
    validate_edge_coloring,
    validate_vertex_coloring,
    vertex_coloring,
)
from .errors import (
    DivisorGraphError,
    EmptyGraphError,
    FactorizationLimitError,
    OpenProblemError,
    OracleSkipped,
    SizeCapError,
    TrivialGraphError,
)
from .formulas import CliqueWitness, ParameterReport, parameter_report, require_standard
from .graph import DivisorGraph, build
from .oracles import DEFAULT_BUDGET, OracleBudget
from .verify import verify_instance

__version__ = "0.1.0"

__all__ = [
    "AutGroup",
    "Automorphism",
    "CliqueWitness",
    "DEFAULT_BUDGET",
    "DivisorGraph",
    "DivisorGraphError",
    "EdgeColoring",
    "EdgeType",
    "EmptyGraphError",
    "Factorization",
    "FactorizationLimitError",
    "OpenProblemError",
    "OracleBudget",
    "OracleSkipped",
    "ParameterReport",
    "SizeCapError",
    "SpecialCase",
    "TrivialGraphError",
    "VertexColoring",
    "aut_structure",
    "build",
    "edge_coloring",
    "edge_coloring_prime_power",
    "edge_coloring_squarefree",
    "enumerate_automorphisms",
    "factorize",
    "generating_set",
    "parameter_report",
    "proper_divisor_count",
    "proper_divisors",
    "require_standard",
    "similar",
    "validate_edge_coloring",
    "validate_vertex_coloring",
    "verify_instance",
    "vertex_coloring",
]
