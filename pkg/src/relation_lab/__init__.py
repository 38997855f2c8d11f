"""Falsification-based checkers for preference relations on product domains.

The package probes a concrete binary relation (given as a comparison oracle
over points of a box-or-polyhedron domain) for continuity and solvability
properties, reports machine-replayable counterexample witnesses when a
property fails at a stated resolution, verifies the implication structure
between the properties on a fixture corpus, and constructively builds
monotone utility representations by bisection along the domain diagonal.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .core import (
    Comparison,
    ComparisonOracle,
    Domain,
    QSqrt2,
    compare,
    contains,
    fixture,
    fixture_names,
    mixture,
    sample_grid,
)
from .checkers import (
    CheckConfig,
    Verdict,
    VerdictKind,
    check_archimedean,
    check_basic,
    check_continuity,
    check_mixture_continuity,
    check_restricted_solvability,
    check_separate_continuity,
    check_stronger_rs,
    check_unrestricted_solvability,
    check_weak_wold,
    check_wold,
)
from .representation import (
    build_utility_table,
    solve_indifference_on_segment,
    verify_representation,
    wold_utility_value,
)
from .harness import (
    Axiom,
    ImplicationEdge,
    check_consistency,
    implication_edges,
    run_battery,
    run_corpus,
)

__all__ = [
    "__version__",
    "Comparison",
    "ComparisonOracle",
    "Domain",
    "QSqrt2",
    "compare",
    "contains",
    "fixture",
    "fixture_names",
    "mixture",
    "sample_grid",
    "CheckConfig",
    "Verdict",
    "VerdictKind",
    "check_archimedean",
    "check_basic",
    "check_continuity",
    "check_mixture_continuity",
    "check_restricted_solvability",
    "check_separate_continuity",
    "check_stronger_rs",
    "check_unrestricted_solvability",
    "check_weak_wold",
    "check_wold",
    "build_utility_table",
    "solve_indifference_on_segment",
    "verify_representation",
    "wold_utility_value",
    "Axiom",
    "ImplicationEdge",
    "check_consistency",
    "implication_edges",
    "run_battery",
    "run_corpus",
]
