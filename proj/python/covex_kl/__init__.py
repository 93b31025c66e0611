"""Kazhdan-Lusztig polynomials of covexillary Schubert varieties."""

from ._core import (
    BudgetError,
    QPoly,
    ValidationError,
    bruhat_leq,
    compute_json,
    intermediates,
    kl_inductive,
    kl_inductive_matrix,
    kl_oracle,
    kl_trees,
    length,
    longest_element,
    q_binomial,
    reduced_word,
    validate,
    vexillary,
)

__all__ = [
    "BudgetError",
    "QPoly",
    "ValidationError",
    "bruhat_leq",
    "compute_json",
    "intermediates",
    "kl_inductive",
    "kl_inductive_matrix",
    "kl_oracle",
    "kl_trees",
    "length",
    "longest_element",
    "q_binomial",
    "reduced_word",
    "validate",
    "vexillary",
]
