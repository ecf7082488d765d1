#include "qsd/sequential.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "qsd/numeric.hpp"

using namespace qsd;

TEST_CASE("n_round_effect reproduces the unsharp spin-x values") {
    // lambda_+ = 0.75 corresponds to t = 0.5.
    const CommutativeObservable xt = make_uniform_noisy_observable(2, 0.75, 2);

    SUBCASE("confirmatory two-round effect") {
        const std::vector<double> eff = n_round_effect(xt, {1, 1});
        CHECK(eff[0] == doctest::Approx(0.5625).epsilon(1e-15));
        CHECK(eff[1] == doctest::Approx(0.0625).epsilon(1e-15));
    }
    SUBCASE("ambiguous two-round effect is proportional to identity") {
        const std::vector<double> eff = n_round_effect(xt, {1, 2});
        CHECK(eff[0] == doctest::Approx(0.1875).epsilon(1e-15));
        CHECK(eff[1] == eff[0]);
    }
    SUBCASE("single round returns the base row") {
        CHECK(n_round_effect(xt, {1}) == xt.row(1));
        CHECK(n_round_effect(xt, {2}) == xt.row(2));
    }
}

TEST_CASE("n_round_effect rejects invalid arrays") {
    const CommutativeObservable a = make_uniform_noisy_observable(2, 0.75, 2);
    CHECK_THROWS_AS(n_round_effect(a, {1, 3}), BadOutcome);
    CHECK_THROWS_AS(n_round_effect(a, {0}), BadOutcome);
    CHECK_THROWS_AS(n_round_effect(a, OutcomeArray{}), BadOutcome);
}

TEST_CASE("n_round_effect is exactly permutation invariant") {
    std::mt19937 rng(777);
    const CommutativeObservable a = make_uniform_noisy_observable(3, 0.55, 4);
    for (int trial = 0; trial < 30; ++trial) {
        const int rounds = 2 + static_cast<int>(rng() % 5);
        OutcomeArray x;
        for (int k = 0; k < rounds; ++k) {
            x.entries.push_back(1 + static_cast<int>(rng() % 3));
        }
        const std::vector<double> base = n_round_effect(a, x);
        OutcomeArray shuffled = x;
        std::shuffle(shuffled.entries.begin(), shuffled.entries.end(), rng);
        CHECK(n_round_effect(a, shuffled) == base);
    }
}

TEST_CASE("n-round effects sum to the identity") {
    for (int n_outcomes : {2, 3, 4}) {
        const double lambda = 0.5 + 0.4 / n_outcomes;
        const CommutativeObservable a =
            make_uniform_noisy_observable(n_outcomes, lambda, n_outcomes);
        for (int rounds = 1; rounds <= 6; ++rounds) {
            std::vector<KahanSum> total(static_cast<size_t>(a.dim()));
            OutcomeArray x;
            for_each_outcome_array(n_outcomes, rounds,
                                   [&](const std::vector<int> &entries, const std::vector<int> &) {
                                       x.entries = entries;
                                       const std::vector<double> eff = n_round_effect(a, x);
                                       for (size_t i = 0; i < total.size(); ++i) {
                                           total[i].add(eff[i]);
                                       }
                                   });
            for (const KahanSum &column : total) {
                CHECK(std::abs(column.value() - 1.0) < 1e-9);
            }
        }
    }
}

TEST_CASE("outcome_probability matches the eigenvalue product") {
    SUBCASE("triple agreement at lambda 0.75") {
        const DiscriminationEnsemble e(2, 2, 0.75);
        CHECK(outcome_probability(e, 1, {1, 1, 1}) == doctest::Approx(0.421875).epsilon(1e-15));
    }
    SUBCASE("single round gives lambda") {
        const DiscriminationEnsemble e(3, 3, 0.6);
        CHECK(outcome_probability(e, 2, {2}) == doctest::Approx(0.6).epsilon(1e-15));
    }
    SUBCASE("one of each label at N=3") {
        const DiscriminationEnsemble e(3, 3, 0.5);
        CHECK(outcome_probability(e, 1, {1, 2, 3}) == doctest::Approx(0.03125).epsilon(1e-15));
    }
    SUBCASE("zero rounds and bad labels are rejected") {
        const DiscriminationEnsemble e(2, 2, 0.75);
        CHECK_THROWS_AS(outcome_probability(e, 1, OutcomeArray{}), BadOutcome);
        CHECK_THROWS_AS(outcome_probability(e, 3, {1, 2}), BadOutcome);
    }
    SUBCASE("agrees with the trace route") {
        std::mt19937 rng(31415);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 3);
            const double lambda = 1.0 / n + (1.0 - 1.0 / n) * unit(rng);
            const DiscriminationEnsemble e(n, n, lambda);
            const CommutativeObservable a = make_uniform_noisy_observable(n, lambda, n);
            const int rounds = 1 + static_cast<int>(rng() % 5);
            OutcomeArray x;
            for (int k = 0; k < rounds; ++k) {
                x.entries.push_back(1 + static_cast<int>(rng() % n));
            }
            const std::vector<double> eff = n_round_effect(a, x);
            for (int j = 1; j <= n; ++j) {
                const double via_trace = eff[static_cast<size_t>(e.support(j))];
                CHECK(std::abs(outcome_probability(e, j, x) - via_trace) < 1e-12);
            }
        }
    }
}

TEST_CASE("dense sequential construction") {
    SUBCASE("three-round spin-x mixed array") {
        const double lp = 0.75;
        const double lm = 0.25;
        const auto effects = to_dense(make_uniform_noisy_observable(2, lp, 2));
        const DenseEffect e = dense_luders_n_round(effects, {1, 2, 1});
        CHECK(std::abs(e.matrix.at(0, 0).real() - lp * lp * lm) < 1e-12);
        CHECK(std::abs(e.matrix.at(1, 1).real() - lm * lm * lp) < 1e-12);
        CHECK(std::abs(e.matrix.at(0, 1)) < 1e-14);
    }
    SUBCASE("projective effects are idempotent under repetition") {
        const std::vector<DenseEffect> effects = {DenseEffect::diagonal({1.0, 0.0}),
                                                  DenseEffect::diagonal({0.0, 1.0})};
        const DenseEffect e = dense_luders_n_round(effects, {1, 1});
        CHECK(e.matrix.at(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(e.matrix.at(1, 1)) < 1e-14);
    }
    SUBCASE("random diagonal POVM agrees with the product form") {
        std::mt19937 rng(2718);
        std::uniform_real_distribution<double> unit(0.05, 1.0);
        std::vector<std::vector<double>> table(3, std::vector<double>(4));
        for (int i = 0; i < 4; ++i) {
            double total = 0.0;
            double raw[3];
            for (double &v : raw) {
                v = unit(rng);
                total += v;
            }
            for (int j = 0; j < 3; ++j) {
                table[static_cast<size_t>(j)][static_cast<size_t>(i)] = raw[j] / total;
            }
        }
        const CommutativeObservable a(3, 4, table);
        const auto effects = to_dense(a);
        const OutcomeArray x = {2, 3, 2};
        const std::vector<double> fast = n_round_effect(a, x);
        const DenseEffect slow = dense_luders_n_round(effects, x);
        for (int i = 0; i < 4; ++i) {
            CHECK(std::abs(slow.matrix.at(i, i).real() - fast[static_cast<size_t>(i)]) < 1e-10);
        }
    }
    SUBCASE("rejects non-POVM input") {
        const std::vector<DenseEffect> not_povm = {DenseEffect::diagonal({0.5, 0.5}),
                                                   DenseEffect::diagonal({0.4, 0.4})};
        CHECK_THROWS_AS(dense_luders_n_round(not_povm, {1, 2}), NotPOVM);
    }
    SUBCASE("rejects out-of-range outcomes") {
        const auto effects = to_dense(make_uniform_noisy_observable(2, 0.75, 2));
        CHECK_THROWS_AS(dense_luders_n_round(effects, {1, 3}), BadOutcome);
    }
}

TEST_CASE("NRoundObservable wraps the effect computation") {
    const NRoundObservable obs(make_uniform_noisy_observable(2, 0.75, 2), 2);
    CHECK(obs.rounds() == 2);
    CHECK(obs.effect({1, 1})[0] == doctest::Approx(0.5625).epsilon(1e-15));
    CHECK_THROWS_AS(obs.effect({1, 1, 1}), BadOutcome);
    CHECK_THROWS_AS(NRoundObservable(make_uniform_noisy_observable(2, 0.75, 2), 0), RangeError);
}

TEST_CASE("OutcomeArray multiplicities") {
    const OutcomeArray x = {1, 2, 1};
    CHECK(x.multiplicity(1) == 2);
    CHECK(x.multiplicity(2) == 1);
    CHECK(x.multiplicity(3) == 0);
    CHECK(x.multiplicities(3) == std::vector<int>{2, 1, 0});
    CHECK_THROWS_AS(x.multiplicities(1), BadOutcome);
}

TEST_CASE("for_each_outcome_array enumerates lexicographically with counts") {
    std::vector<std::vector<int>> seen;
    for_each_outcome_array(2, 2, [&](const std::vector<int> &entries, const std::vector<int> &mult) {
        seen.push_back(entries);
        CHECK(mult[1] + mult[2] == 2);
        CHECK(mult[1] == static_cast<int>(std::count(entries.begin(), entries.end(), 1)));
    });
    const std::vector<std::vector<int>> expected = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    CHECK(seen == expected);
}
