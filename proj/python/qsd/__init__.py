"""Minimum-error discrimination of orthogonal states via repeated unsharp
measurements.

Everything is implemented in the C++ extension; this package re-exports it.
"""

from ._qsd import (  # noqa: F401
    CommutativeObservable,
    DenseEffect,
    DeterministicKernel,
    DiscriminationEnsemble,
    Error,
    PostProcessedObservable,
    UniformStructure,
    __version__,
    binary_success_coefficients,
    binary_sum_form,
    brute_force_best_success,
    closed_form_binary,
    closed_form_nary,
    compare_formula_vs_enumeration,
    dense_luders_n_round,
    is_ambiguous,
    lemma_binomial_sum,
    make_uniform_noisy_observable,
    n_round_effect,
    optimal_kernel,
    outcome_probability,
    post_process,
    success_probability,
    to_dense,
    validate_uniform_structure,
)
