#include "qsd/discrimination.hpp"

#include <cmath>

#include "doctest.h"

using namespace qsd;

TEST_CASE("optimal_kernel assigns by majority with lowest-label ties") {
    SUBCASE("binary three rounds is the majority rule") {
        const DiscriminationEnsemble e(2, 2, 0.75);
        const DeterministicKernel k = optimal_kernel(e, 3);
        CHECK(k.assign({1, 1, 1}) == 1);
        CHECK(k.assign({1, 2, 1}) == 1);
        CHECK(k.assign({2, 1, 2}) == 2);
        CHECK(k.assign({2, 2, 2}) == 2);
    }
    SUBCASE("ternary two rounds") {
        const DiscriminationEnsemble e(3, 3, 0.6);
        const DeterministicKernel k = optimal_kernel(e, 2);
        for (int i = 1; i <= 3; ++i) {
            CHECK(k.assign({i, i}) == i);
        }
        CHECK(k.assign({1, 2}) == 1);
        CHECK(k.assign({3, 2}) == 2);
    }
    SUBCASE("binary tie goes to the lowest label") {
        const DiscriminationEnsemble e(2, 2, 0.75);
        const DeterministicKernel k = optimal_kernel(e, 2);
        CHECK(k.assign({1, 2}) == 1);
        CHECK(k.assign({2, 1}) == 1);
    }
}

TEST_CASE("DeterministicKernel validates its domain") {
    const DeterministicKernel k(2, 2, [](const OutcomeArray &) { return 1; });
    CHECK_THROWS_AS(k.assign({1}), KernelDomainMismatch);
    CHECK_THROWS_AS(k.assign({1, 3}), BadOutcome);
    const DeterministicKernel bad(2, 1, [](const OutcomeArray &) { return 7; });
    CHECK_THROWS_AS(bad.assign({1}), BadOutcome);
}

TEST_CASE("post_process") {
    const CommutativeObservable a = make_uniform_noisy_observable(2, 0.75, 2);

    SUBCASE("identity kernel at one round returns the base observable") {
        const DeterministicKernel identity(2, 1,
                                           [](const OutcomeArray &x) { return x.entries[0]; });
        const PostProcessedObservable b = post_process(a, 1, identity);
        CHECK(b.effects[0] == a.row(1));
        CHECK(b.effects[1] == a.row(2));
    }
    SUBCASE("two rounds with the optimal kernel") {
        // Both tie arrays fall to "+": B(+) = A^2 + 2 A(I-A), B(-) = (I-A)^2.
        const DiscriminationEnsemble e(2, 2, 0.75);
        const PostProcessedObservable b = post_process(a, 2, optimal_kernel(e, 2));
        for (int i = 0; i < 2; ++i) {
            const double ai = a.row(1)[static_cast<size_t>(i)];
            CHECK(b.effects[0][static_cast<size_t>(i)] ==
                  doctest::Approx(ai * ai + 2.0 * ai * (1.0 - ai)).epsilon(1e-14));
            CHECK(b.effects[1][static_cast<size_t>(i)] ==
                  doctest::Approx((1.0 - ai) * (1.0 - ai)).epsilon(1e-14));
        }
        CHECK(success_probability(e, b) == doctest::Approx(0.75).epsilon(1e-14));
    }
    SUBCASE("three rounds groups the majority effects") {
        // B(+) = A^3-term + three lp*lm*A(+) terms on the "+" support.
        const double lp = 0.75;
        const double lm = 0.25;
        const DiscriminationEnsemble e(2, 2, lp);
        const PostProcessedObservable b = post_process(a, 3, optimal_kernel(e, 3));
        CHECK(b.effects[0][0] ==
              doctest::Approx(lp * lp * lp + 3.0 * lp * lm * lp).epsilon(1e-14));
        CHECK(b.effects[0][1] ==
              doctest::Approx(lm * lm * lm + 3.0 * lp * lm * lm).epsilon(1e-14));
        CHECK(b.effects[1][0] ==
              doctest::Approx(lm * lm * lm + 3.0 * lp * lm * lm).epsilon(1e-14));
    }
    SUBCASE("effects sum to the identity") {
        const DiscriminationEnsemble e(2, 2, 0.75);
        for (int rounds = 1; rounds <= 6; ++rounds) {
            const PostProcessedObservable b = post_process(a, rounds, optimal_kernel(e, rounds));
            for (int i = 0; i < b.dim; ++i) {
                double col = 0.0;
                for (int j = 0; j < b.n_outcomes; ++j) {
                    col += b.effects[static_cast<size_t>(j)][static_cast<size_t>(i)];
                }
                CHECK(std::abs(col - 1.0) < 1e-12);
            }
        }
    }
    SUBCASE("mismatched kernel is rejected") {
        const DeterministicKernel k(3, 2, [](const OutcomeArray &) { return 1; });
        CHECK_THROWS_AS(post_process(a, 2, k), KernelDomainMismatch);
    }
}

TEST_CASE("success probabilities for the motivating example") {
    const CommutativeObservable a = make_uniform_noisy_observable(2, 0.75, 2);
    const DiscriminationEnsemble e(2, 2, 0.75);
    const auto success_at = [&](int rounds) {
        return success_probability(e, post_process(a, rounds, optimal_kernel(e, rounds)));
    };
    CHECK(success_at(1) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(success_at(2) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(success_at(3) == doctest::Approx(0.84375).epsilon(1e-14));
}

TEST_CASE("brute_force_best_success") {
    SUBCASE("two rounds never beat one") {
        for (double lambda : {0.55, 0.7, 0.92}) {
            const DiscriminationEnsemble e(2, 2, lambda);
            CHECK(std::abs(brute_force_best_success(e, 2).probability - lambda) < 1e-14);
        }
    }
    SUBCASE("sharp observable discriminates perfectly at any depth") {
        const DiscriminationEnsemble e(3, 3, 1.0);
        for (int rounds : {1, 2, 5}) {
            CHECK(brute_force_best_success(e, rounds).probability ==
                  doctest::Approx(1.0).epsilon(1e-14));
        }
    }
    SUBCASE("ternary three rounds, frozen enumeration value") {
        const DiscriminationEnsemble e(3, 3, 0.6);
        CHECK(std::abs(brute_force_best_success(e, 3).probability - 0.696) < 1e-12);
    }
    SUBCASE("budget is enforced") {
        const DiscriminationEnsemble e(3, 3, 0.6);
        CHECK_THROWS_AS(brute_force_best_success(e, 5, 10), BudgetExceeded);
    }
    SUBCASE("returned kernel achieves the enumerated optimum") {
        const CommutativeObservable a = make_uniform_noisy_observable(3, 0.7, 3);
        const DiscriminationEnsemble e(3, 3, 0.7);
        const BruteForceResult best = brute_force_best_success(e, 3);
        const double via_kernel = success_probability(e, post_process(a, 3, best.kernel));
        CHECK(std::abs(via_kernel - best.probability) < 1e-12);
    }
}

TEST_CASE("per-array maximization matches kernel-space optimum") {
    for (int n_outcomes = 2; n_outcomes <= 4; ++n_outcomes) {
        const CommutativeObservable a =
            make_uniform_noisy_observable(n_outcomes, 0.5 + 0.3 / n_outcomes, n_outcomes);
        for (int rounds = 1; rounds <= 5; ++rounds) {
            for (int k = 1; k <= 9; ++k) {
                const double floor = 1.0 / n_outcomes;
                const double lambda = floor + k * (1.0 - floor) / 10.0;
                const DiscriminationEnsemble e(n_outcomes, n_outcomes, lambda);
                const CommutativeObservable obs =
                    make_uniform_noisy_observable(n_outcomes, lambda, n_outcomes);
                const double via_optimal = success_probability(
                    e, post_process(obs, rounds, optimal_kernel(e, rounds)));
                const double via_enumeration = brute_force_best_success(e, rounds).probability;
                CHECK(std::abs(via_optimal - via_enumeration) < 1e-12);
            }
        }
    }
}

TEST_CASE("tie-break choice does not move the success probability") {
    // Highest-label argmax instead of lowest-label.
    for (int n_outcomes : {2, 3}) {
        for (int rounds = 1; rounds <= 4; ++rounds) {
            const double lambda = 0.45 + 0.4 / n_outcomes;
            const DiscriminationEnsemble e(n_outcomes, n_outcomes, lambda);
            const CommutativeObservable a =
                make_uniform_noisy_observable(n_outcomes, lambda, n_outcomes);
            const DeterministicKernel highest(
                n_outcomes, rounds, [n_outcomes](const OutcomeArray &x) {
                    const std::vector<int> m = x.multiplicities(n_outcomes);
                    int best = 1;
                    for (int j = 2; j <= n_outcomes; ++j) {
                        if (m[static_cast<size_t>(j - 1)] >= m[static_cast<size_t>(best - 1)]) {
                            best = j;
                        }
                    }
                    return best;
                });
            const double low = success_probability(
                e, post_process(a, rounds, optimal_kernel(e, rounds)));
            const double high = success_probability(e, post_process(a, rounds, highest));
            CHECK(std::abs(low - high) < 1e-12);
        }
    }
}

TEST_CASE("rule of three and monotonicity across the grid") {
    for (int n_outcomes = 2; n_outcomes <= 4; ++n_outcomes) {
        const double floor = 1.0 / n_outcomes;
        double previous_p3 = 0.0;
        for (int k = 0; k <= 10; ++k) {
            const double lambda = (k == 10) ? 1.0 : floor + k * (1.0 - floor) / 10.0;
            const DiscriminationEnsemble e(n_outcomes, n_outcomes, lambda);
            const double p1 = brute_force_best_success(e, 1).probability;
            const double p2 = brute_force_best_success(e, 2).probability;
            const double p3 = brute_force_best_success(e, 3).probability;
            CHECK(std::abs(p2 - p1) < 1e-12);
            if (k > 0 && k < 10) {
                CHECK(p3 > p1);
            }
            CHECK(p3 >= previous_p3 - 1e-12);
            previous_p3 = p3;
        }
    }
}

TEST_CASE("is_ambiguous") {
    SUBCASE("binary balanced array") {
        const DiscriminationEnsemble e(2, 2, 0.75);
        CHECK(is_ambiguous(e, {1, 2}, {1, 2}));
        CHECK_FALSE(is_ambiguous(e, {1, 2, 1}, {1, 2}));
    }
    SUBCASE("subset sensitivity at N=3") {
        const DiscriminationEnsemble e(3, 3, 0.6);
        CHECK(is_ambiguous(e, {1, 2}, {1, 2}));
        CHECK_FALSE(is_ambiguous(e, {1, 2}, {1, 2, 3}));
        CHECK(is_ambiguous(e, {1, 2}, {3}));
    }
    SUBCASE("degenerate lambda is rejected") {
        const DiscriminationEnsemble e(2, 2, 0.5);
        CHECK_THROWS_AS(is_ambiguous(e, {1, 2}, {1, 2}), DegenerateLambda);
    }
    SUBCASE("subset validation") {
        const DiscriminationEnsemble e(3, 3, 0.6);
        CHECK_THROWS_AS(is_ambiguous(e, {1, 2}, {}), RangeError);
        CHECK_THROWS_AS(is_ambiguous(e, {1, 2}, {1, 1}), RangeError);
        CHECK_THROWS_AS(is_ambiguous(e, {1, 2}, {4}), RangeError);
        CHECK_THROWS_AS(is_ambiguous(e, {1, 5}, {1, 2}), BadOutcome);
    }
}
