"""Evolve and verify small digital circuits from truth tables."""

from ._core import (
    Circuit,
    CircuitError,
    EvolutionConfig,
    RunResult,
    TruthTable,
    error_percent,
    evaluate,
    fitness,
    parse_prefix,
    parse_table,
    run_evolution,
    run_trials,
    synthesize,
    table_from_expression,
    verify,
)

__all__ = [
    "Circuit",
    "CircuitError",
    "EvolutionConfig",
    "RunResult",
    "TruthTable",
    "error_percent",
    "evaluate",
    "fitness",
    "parse_prefix",
    "parse_table",
    "run_evolution",
    "run_trials",
    "synthesize",
    "table_from_expression",
    "verify",
]
