"""Infinite permutations, their factors and complexities, with exact arithmetic."""

from ._permlab import (
    Error,
    Pattern,
    Permutation,
    automaton_check,
    automaton_eval,
    count_primitive_words,
    count_square_free,
    enumerate_periodic_patterns,
    factor_complexity,
    find_nongcd_witness,
    is_square,
    is_square_free,
    max_complexity,
    max_pattern_complexity,
    psi,
    run_cli,
    tm_automaton_table,
    verify_theorem2,
    verify_theorem3,
    word_period_classes,
    word_prefix,
)

__all__ = [
    "Error",
    "Pattern",
    "Permutation",
    "automaton_check",
    "automaton_eval",
    "count_primitive_words",
    "count_square_free",
    "enumerate_periodic_patterns",
    "factor_complexity",
    "find_nongcd_witness",
    "is_square",
    "is_square_free",
    "max_complexity",
    "max_pattern_complexity",
    "psi",
    "run_cli",
    "tm_automaton_table",
    "verify_theorem2",
    "verify_theorem3",
    "word_period_classes",
    "word_prefix",
]
