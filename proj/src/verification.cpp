#include "qsd/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qsd/closedform.hpp"
#include "qsd/curves.hpp"
#include "qsd/sequential.hpp"

namespace qsd {

namespace {

void track(double &worst, double deviation) { worst = std::max(worst, deviation); }

}  // namespace

CheckResult check_binary_rule_of_three() {
    CheckResult r;
    r.name = "binary-rule-of-three";
    r.params = "lambda in {0.55, 0.60, ..., 0.95}";
    r.tolerance = 1e-12;
    for (int k = 0; k <= 8; ++k) {
        const double lambda = 0.55 + 0.05 * k;
        DiscriminationEnsemble ensemble(2, 2, lambda);
        const double p1 = brute_force_best_success(ensemble, 1).probability;
        const double p2 = brute_force_best_success(ensemble, 2).probability;
        const double p3 = brute_force_best_success(ensemble, 3).probability;
        track(r.worst, std::abs(p1 - lambda));
        track(r.worst, std::abs(p2 - lambda));
        track(r.worst, std::abs(p3 - (3.0 * lambda * lambda - 2.0 * lambda * lambda * lambda)));
    }
    r.pass = r.worst < r.tolerance;
    return r;
}

CheckResult check_binary_formula_depth(std::uint64_t budget) {
    CheckResult r;
    r.name = "binary-closed-form-depth";
    r.params = "odd n in {1,3,5,7,9}, 11-point lambda grid";
    r.tolerance = 1e-10;
    double worst_collapse = 0.0;
    for (int n = 1; n <= 9; n += 2) {
        for (int k = 0; k <= 10; ++k) {
            const double lambda = (k == 10) ? 1.0 : 0.5 + 0.05 * k;
            DiscriminationEnsemble ensemble(2, 2, lambda);
            const double formula = closed_form_binary(n, lambda);
            const double enum_odd = brute_force_best_success(ensemble, n, budget).probability;
            const double enum_even = brute_force_best_success(ensemble, n + 1, budget).probability;
            track(r.worst, std::abs(formula - enum_odd));
            track(worst_collapse, std::abs(enum_even - enum_odd));
        }
    }
    r.pass = r.worst < 1e-10 && worst_collapse < 1e-12;
    char buf[96];
    std::snprintf(buf, sizeof buf, "even-round collapse worst %.3e (tol 1e-12)", worst_collapse);
    r.detail = buf;
    return r;
}

CheckResult check_lemma_identity() {
    CheckResult r;
    r.name = "alternating-binomial-identity";
    r.params = "odd n <= 21, all valid i, exact integers";
    r.tolerance = 0.0;
    r.pass = true;
    int evaluated = 0;
    try {
        for (int n = 1; n <= 21; n += 2) {
            for (int i = (n + 1) / 2; i <= n; ++i) {
                lemma_binomial_sum(n, i);
                ++evaluated;
            }
        }
    } catch (const Error &e) {
        r.pass = false;
        r.worst = 1.0;
        r.detail = e.what();
    }
    if (r.pass) {
        r.detail = std::to_string(evaluated) + " identities hold exactly";
    }
    return r;
}

CheckResult check_ambiguity_equivalence() {
    CheckResult r;
    r.name = "ambiguity-multiplicity-vs-trace";
    r.params = "N in {2,3,4}, n in 1..4, lambda in {0.4, 0.6, 0.9} above 1/N";
    r.tolerance = 1e-12;
    long mismatches = 0;
    long tested = 0;
    for (int n_outcomes = 2; n_outcomes <= 4; ++n_outcomes) {
        for (double lambda : {0.4, 0.6, 0.9}) {
            if (lambda <= 1.0 / n_outcomes) {
                continue;
            }
            DiscriminationEnsemble ensemble(n_outcomes, n_outcomes, lambda);
            CommutativeObservable observable =
                make_uniform_noisy_observable(n_outcomes, lambda, n_outcomes);
            for (int rounds = 1; rounds <= 4; ++rounds) {
                OutcomeArray x;
                for_each_outcome_array(n_outcomes, rounds, [&](const std::vector<int> &entries,
                                                               const std::vector<int> &) {
                    x.entries = entries;
                    const std::vector<double> effect = n_round_effect(observable, x);
                    for (int mask = 1; mask < (1 << n_outcomes); ++mask) {
                        std::vector<int> subset;
                        for (int j = 1; j <= n_outcomes; ++j) {
                            if (mask & (1 << (j - 1))) {
                                subset.push_back(j);
                            }
                        }
                        const bool by_multiplicity = is_ambiguous(ensemble, x, subset);
                        // Direct route: the trace probabilities are the
                        // support entries of the n-round effect.
                        double lo = 2.0;
                        double hi = -1.0;
                        for (int j : subset) {
                            const double p =
                                effect[static_cast<size_t>(ensemble.support(j))];
                            lo = std::min(lo, p);
                            hi = std::max(hi, p);
                        }
                        const bool by_trace = (hi - lo) <= 1e-12;
                        ++tested;
                        if (by_multiplicity != by_trace) {
                            ++mismatches;
                        }
                    }
                });
            }
        }
    }
    r.worst = static_cast<double>(mismatches);
    r.pass = mismatches == 0;
    r.detail = std::to_string(tested) + " (array, subset) pairs compared";
    return r;
}

CheckResult check_nary_formulas(std::uint64_t budget) {
    CheckResult r;
    r.name = "nary-closed-forms";
    r.params = "N in {3..6}, 9-point interior lambda grid, n in {2,3,4}";
    r.tolerance = 1e-10;
    for (int n_outcomes = 3; n_outcomes <= 6; ++n_outcomes) {
        const double floor = 1.0 / n_outcomes;
        for (int k = 1; k <= 9; ++k) {
            const double lambda = floor + k * (1.0 - floor) / 10.0;
            DiscriminationEnsemble ensemble(n_outcomes, n_outcomes, lambda);
            const double p2 = brute_force_best_success(ensemble, 2, budget).probability;
            const double p3 = brute_force_best_success(ensemble, 3, budget).probability;
            const double p4 = brute_force_best_success(ensemble, 4, budget).probability;
            track(r.worst, std::abs(p2 - lambda));
            track(r.worst, std::abs(p3 - closed_form_nary(3, n_outcomes, lambda)));
            track(r.worst, std::abs(p4 - closed_form_nary(4, n_outcomes, lambda)));
        }
    }
    r.pass = r.worst < r.tolerance;
    return r;
}

CheckResult check_dense_oracle_agreement() {
    CheckResult r;
    r.name = "dense-oracle-vs-diagonal";
    r.params = "50 random commutative POVMs, d <= 8, N <= 4, n <= 4";
    r.tolerance = 1e-10;
    std::mt19937 rng(735801);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = 2 + static_cast<int>(rng() % 7);
        const int n_outcomes = std::min(dim, 2 + static_cast<int>(rng() % 3));
        const int rounds = 1 + static_cast<int>(rng() % 4);

        std::vector<std::vector<double>> table(
            static_cast<size_t>(n_outcomes), std::vector<double>(static_cast<size_t>(dim)));
        for (int i = 0; i < dim; ++i) {
            double total = 0.0;
            std::vector<double> raw(static_cast<size_t>(n_outcomes));
            for (int j = 0; j < n_outcomes; ++j) {
                raw[static_cast<size_t>(j)] = unit(rng);
                total += raw[static_cast<size_t>(j)];
            }
            for (int j = 0; j < n_outcomes; ++j) {
                table[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                    raw[static_cast<size_t>(j)] / total;
            }
        }
        CommutativeObservable observable(n_outcomes, dim, table);
        const std::vector<DenseEffect> dense = to_dense(observable);

        OutcomeArray x;
        x.entries.resize(static_cast<size_t>(rounds));
        for (int k = 0; k < rounds; ++k) {
            x.entries[static_cast<size_t>(k)] = 1 + static_cast<int>(rng() % n_outcomes);
        }

        const std::vector<double> fast = n_round_effect(observable, x);
        const DenseEffect sandwich = dense_luders_n_round(dense, x);
        for (int a = 0; a < dim; ++a) {
            for (int b = 0; b < dim; ++b) {
                const complexd expect = (a == b) ? complexd{fast[static_cast<size_t>(a)], 0.0}
                                                 : complexd{};
                track(r.worst, std::abs(sandwich.matrix.at(a, b) - expect));
            }
        }
    }
    r.pass = r.worst < r.tolerance;
    return r;
}

CheckResult check_figure_properties() {
    CheckResult r;
    r.name = "figure-curve-shapes";
    r.params = "binary n in {1,21,41}; staircase to n=50; N=10 rounds {1,3,4}";
    r.tolerance = 1e-12;
    bool strict_ok = true;

    // Success vs lambda: monotone in lambda, monotone in depth, pinned
    // endpoints.
    CurveRequest fig_a;
    fig_a.mode = CurveMode::BinaryCurve;
    fig_a.n_outcomes = 2;
    fig_a.rounds = {1, 21, 41};
    fig_a.lambda_min = 0.5;
    fig_a.lambda_max = 1.0;
    fig_a.lambda_steps = 201;
    const std::vector<CurveRow> rows_a = run_binary_curve(fig_a);
    const size_t per_lambda = fig_a.rounds.size();
    for (size_t k = 0; k < rows_a.size(); ++k) {
        const CurveRow &row = rows_a[k];
        if (k >= per_lambda) {
            const CurveRow &prev = rows_a[k - per_lambda];  // same n, previous lambda
            track(r.worst, std::max(0.0, prev.p_succ - row.p_succ));
        }
        if (k % per_lambda != 0) {
            const CurveRow &shallower = rows_a[k - 1];  // same lambda, smaller n
            track(r.worst, std::max(0.0, shallower.p_succ - row.p_succ));
        }
        if (row.lambda == 0.5) {
            track(r.worst, std::abs(row.p_succ - 0.5));
        }
        if (row.lambda == 1.0) {
            track(r.worst, std::abs(row.p_succ - 1.0));
        }
    }

    // Staircase: an even round count repeats the preceding odd one.
    CurveRequest fig_b;
    fig_b.mode = CurveMode::BinaryVsN;
    fig_b.n_outcomes = 2;
    fig_b.rounds = {50};
    fig_b.lambdas = {0.6, 0.7, 0.8};
    const std::vector<CurveRow> rows_b = run_binary_vs_n(fig_b);
    const size_t stride = fig_b.lambdas.size();
    for (size_t k = 0; k < rows_b.size(); ++k) {
        if (rows_b[k].rounds % 2 == 0) {
            track(r.worst, std::abs(rows_b[k].p_succ - rows_b[k - stride].p_succ));
        }
    }

    // Ten-outcome comparison: strict ordering inside, common endpoints.
    CurveRequest fig_c;
    fig_c.mode = CurveMode::NaryCurve;
    fig_c.n_outcomes = 10;
    fig_c.rounds = {1, 3, 4};
    fig_c.lambda_min = 0.1;
    fig_c.lambda_max = 1.0;
    fig_c.lambda_steps = 201;
    const std::vector<CurveRow> rows_c = run_nary_curve(fig_c);
    for (size_t k = 0; k < rows_c.size(); k += 3) {
        const double p1 = rows_c[k].p_succ;
        const double p3 = rows_c[k + 1].p_succ;
        const double p4 = rows_c[k + 2].p_succ;
        const double lambda = rows_c[k].lambda;
        if (lambda == 0.1) {
            track(r.worst, std::abs(p1 - 0.1));
            track(r.worst, std::abs(p3 - 0.1));
            track(r.worst, std::abs(p4 - 0.1));
        } else if (lambda == 1.0) {
            track(r.worst, std::abs(p1 - 1.0));
            track(r.worst, std::abs(p3 - 1.0));
            track(r.worst, std::abs(p4 - 1.0));
        } else {
            strict_ok = strict_ok && (p4 > p3) && (p3 > p1);
        }
    }

    r.pass = strict_ok && r.worst < r.tolerance;
    if (!strict_ok) {
        r.detail = "strict interior ordering P4 > P3 > P1 violated";
    }
    return r;
}

CheckResult check_qubit_worked_example() {
    CheckResult r;
    r.name = "unsharp-spin-x-example";
    r.params = "t in {0.2, 0.5, 0.9}, 2- and 3-round effects, both routes";
    r.tolerance = 1e-12;
    for (double t : {0.2, 0.5, 0.9}) {
        const double lp = (1.0 + t) / 2.0;
        const double lm = 1.0 - lp;
        CommutativeObservable observable = make_uniform_noisy_observable(2, lp, 2);
        const std::vector<DenseEffect> dense = to_dense(observable);

        const auto expect_effect = [&](const OutcomeArray &x, double first, double second) {
            const std::vector<double> fast = n_round_effect(observable, x);
            track(r.worst, std::abs(fast[0] - first));
            track(r.worst, std::abs(fast[1] - second));
            const DenseEffect sandwich = dense_luders_n_round(dense, x);
            track(r.worst, std::abs(sandwich.matrix.at(0, 0).real() - first));
            track(r.worst, std::abs(sandwich.matrix.at(1, 1).real() - second));
            track(r.worst, std::abs(sandwich.matrix.at(0, 1)));
            track(r.worst, std::abs(sandwich.matrix.at(1, 0)));
        };

        expect_effect({1, 1}, lp * lp, lm * lm);
        expect_effect({1, 2}, lp * lm, lp * lm);
        expect_effect({2, 1}, lp * lm, lp * lm);
        expect_effect({2, 2}, lm * lm, lp * lp);

        expect_effect({1, 1, 1}, lp * lp * lp, lm * lm * lm);
        for (const OutcomeArray &x :
             {OutcomeArray{1, 1, 2}, OutcomeArray{1, 2, 1}, OutcomeArray{2, 1, 1}}) {
            expect_effect(x, lp * lm * lp, lp * lm * lm);
        }
        for (const OutcomeArray &x :
             {OutcomeArray{2, 2, 1}, OutcomeArray{2, 1, 2}, OutcomeArray{1, 2, 2}}) {
            expect_effect(x, lp * lm * lm, lp * lm * lp);
        }
        expect_effect({2, 2, 2}, lm * lm * lm, lp * lp * lp);
    }
    r.pass = r.worst < r.tolerance;
    return r;
}

std::vector<CheckResult> default_verification_suite(std::uint64_t budget) {
    std::vector<CheckResult> checks;
    checks.push_back(check_binary_rule_of_three());
    checks.push_back(check_binary_formula_depth(budget));
    checks.push_back(check_lemma_identity());
    checks.push_back(check_ambiguity_equivalence());
    checks.push_back(check_nary_formulas(budget));
    checks.push_back(check_dense_oracle_agreement());
    checks.push_back(check_figure_properties());
    checks.push_back(check_qubit_worked_example());
    return checks;
}

}  // namespace qsd
