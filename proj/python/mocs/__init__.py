"""Multi-criteria optimization through ideal and anti-ideal comparison standards.

The heavy lifting happens in the compiled ``_core`` extension; this package
re-exports it.
"""

from ._core import (
    GridCapError,
    InfeasibleError,
    MocsError,
    ParseError,
    Problem,
    SolveReport,
    Standards,
    build,
    certify,
    circuits,
    dominates,
    example1,
    example2,
    load_problem,
    parse_problem,
    pareto_front,
    solve,
    standards,
    verify,
)

__all__ = [
    "GridCapError",
    "InfeasibleError",
    "MocsError",
    "ParseError",
    "Problem",
    "SolveReport",
    "Standards",
    "build",
    "certify",
    "circuits",
    "dominates",
    "example1",
    "example2",
    "load_problem",
    "parse_problem",
    "pareto_front",
    "solve",
    "standards",
    "verify",
]

__version__ = "0.1.0"
