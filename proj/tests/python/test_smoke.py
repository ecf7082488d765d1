"""Smoke tests for the qsd extension module.

Runnable under pytest or directly: python3 test_smoke.py
"""

import math

import qsd


def test_closed_forms():
    assert qsd.closed_form_binary(1, 0.73) == 0.73
    assert abs(qsd.closed_form_binary(3, 0.75) - 0.84375) < 1e-15
    assert abs(qsd.closed_form_binary(5, 0.8) - 0.94208) < 1e-15
    # even rounds collapse onto the preceding odd count
    assert qsd.closed_form_binary(4, 0.8) == qsd.closed_form_binary(3, 0.8)
    assert abs(qsd.closed_form_nary(3, 3, 0.6) - 0.696) < 1e-15
    assert abs(qsd.closed_form_nary(4, 3, 0.6) - 0.7344) < 1e-15
    assert abs(qsd.binary_sum_form(7, 0.65) - qsd.closed_form_binary(7, 0.65)) < 1e-12


def test_coefficients_and_lemma():
    rounds, coeffs = qsd.binary_success_coefficients(5)
    assert rounds == 5
    assert coeffs == [10, -15, 6]
    assert qsd.lemma_binomial_sum(3, 3) == -2
    assert qsd.lemma_binomial_sum(5, 5) == 6


def test_observable_round_trip():
    a = qsd.make_uniform_noisy_observable(2, 0.75, 2)
    assert a.eig_table == [[0.75, 0.25], [0.25, 0.75]]
    e = qsd.DiscriminationEnsemble(2, 2, 0.75)
    s = qsd.validate_uniform_structure(a, e)
    assert abs(s.lambda_ - 0.75) < 1e-15
    assert abs(s.mu - 0.25) < 1e-15
    assert s.free_columns == []

    effects = qsd.to_dense(a)
    assert effects[0].diagonal_entries() == [0.75, 0.25]


def test_sequential_and_discrimination():
    a = qsd.make_uniform_noisy_observable(2, 0.75, 2)
    e = qsd.DiscriminationEnsemble(2, 2, 0.75)

    eff = qsd.n_round_effect(a, [1, 1])
    assert abs(eff[0] - 0.5625) < 1e-15 and abs(eff[1] - 0.0625) < 1e-15
    assert abs(qsd.outcome_probability(e, 1, [1, 1, 1]) - 0.421875) < 1e-15

    sandwich = qsd.dense_luders_n_round(qsd.to_dense(a), [1, 2, 1])
    assert abs(sandwich.matrix[0][0].real - 0.75 * 0.75 * 0.25) < 1e-12

    kernel = qsd.optimal_kernel(e, 3)
    assert kernel.assign([1, 2, 1]) == 1
    post = qsd.post_process(a, 3, kernel)
    assert abs(qsd.success_probability(e, post) - 0.84375) < 1e-12

    prob, best = qsd.brute_force_best_success(e, 3)
    assert abs(prob - 0.84375) < 1e-12
    assert best.assign([2, 1, 2]) == 2

    assert qsd.is_ambiguous(e, [1, 2], [1, 2])
    assert not qsd.is_ambiguous(e, [1, 2, 1], [1, 2])


def test_custom_kernel_and_comparison():
    e = qsd.DiscriminationEnsemble(2, 2, 0.8)
    a = qsd.make_uniform_noisy_observable(2, 0.8, 2)
    always_one = qsd.DeterministicKernel(2, 1, lambda x: 1)
    post = qsd.post_process(a, 1, always_one)
    assert abs(qsd.success_probability(e, post) - 0.5) < 1e-15

    rows = qsd.compare_formula_vs_enumeration(2, 5, [0.6, 0.8, 1.0])
    assert len(rows) == 3
    assert all(row[3] < 1e-12 for row in rows)


def test_errors_surface_as_python_exceptions():
    for bad_call in (
        lambda: qsd.closed_form_binary(3, 0.2),
        lambda: qsd.closed_form_nary(5, 3, 0.6),
        lambda: qsd.make_uniform_noisy_observable(3, 0.5, 2),
        lambda: qsd.DiscriminationEnsemble(2, 2, 0.3),
    ):
        try:
            bad_call()
        except qsd.Error:
            pass
        else:
            raise AssertionError("expected qsd.Error")


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok  {test.__name__}")
    print(f"{len(tests)} smoke tests passed (qsd {qsd.__version__})")


if __name__ == "__main__":
    main()
