#include "qsd/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsd/numeric.hpp"

namespace qsd {

namespace {

constexpr int kMaxBinaryRounds = 64;
constexpr double kCompareTolerance = 1e-10;

struct TwoSum {
    double value;
    double error;
};

TwoSum two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return TwoSum{s, (a - (s - bb)) + (b - bb)};
}

void require_binary_lambda(double lambda) {
    if (!(lambda >= 0.5 && lambda <= 1.0)) {
        throw LambdaOutOfRange("lambda " + std::to_string(lambda) + " outside [1/2, 1]");
    }
}

}  // namespace

BinarySuccessFormula BinarySuccessFormula::for_rounds(int rounds) {
    if (rounds < 1) {
        throw RangeError("BinarySuccessFormula: rounds must be >= 1");
    }
    if (rounds > kMaxBinaryRounds) {
        throw UnsupportedRounds("BinarySuccessFormula: rounds > " +
                                std::to_string(kMaxBinaryRounds) +
                                " overflows exact coefficient arithmetic");
    }
    BinarySuccessFormula f;
    f.rounds = (rounds % 2 == 1) ? rounds : rounds - 1;
    const int n = f.rounds;
    const int half = (n + 1) / 2;
    f.coefficients.reserve(static_cast<size_t>(n - half + 1));
    for (int i = half; i <= n; ++i) {
        const int128 magnitude = binomial(n, i) * binomial(i - 1, (n - 1) / 2);
        f.coefficients.push_back(((i - half) % 2 == 0) ? magnitude : -magnitude);
    }
    return f;
}

double BinarySuccessFormula::evaluate(double lambda) const {
    require_binary_lambda(lambda);
    const int half = (rounds + 1) / 2;

    // Compensated Horner: each step tracks the rounding error of the
    // multiply (via fma) and of the add, accumulating them in a parallel
    // low-order polynomial. The coefficients' own low parts (nonzero once
    // they pass 2^53) join the same accumulator.
    SplitDouble top = split_int128(coefficients.back());
    double value = top.hi;
    double err = top.lo;
    for (int i = rounds - 1; i >= 0; --i) {
        const double product = value * lambda;
        const double product_err = std::fma(value, lambda, -product);
        SplitDouble c{0.0, 0.0};
        if (i >= half) {
            c = split_int128(coefficients[static_cast<size_t>(i - half)]);
        }
        const TwoSum s = two_sum(product, c.hi);
        value = s.value;
        err = err * lambda + (product_err + s.error + c.lo);
    }
    return value + err;
}

double closed_form_binary(int rounds, double lambda) {
    require_binary_lambda(lambda);
    return BinarySuccessFormula::for_rounds(rounds).evaluate(lambda);
}

double binary_sum_form(int rounds, double lambda) {
    if (rounds < 1) {
        throw RangeError("binary_sum_form: rounds must be >= 1");
    }
    if (rounds > kMaxBinaryRounds) {
        throw UnsupportedRounds("binary_sum_form: rounds > " + std::to_string(kMaxBinaryRounds));
    }
    require_binary_lambda(lambda);

    std::vector<double> lam_pow(static_cast<size_t>(rounds) + 1, 1.0);
    std::vector<double> bar_pow(static_cast<size_t>(rounds) + 1, 1.0);
    for (int k = 1; k <= rounds; ++k) {
        lam_pow[static_cast<size_t>(k)] = lam_pow[static_cast<size_t>(k - 1)] * lambda;
        bar_pow[static_cast<size_t>(k)] = bar_pow[static_cast<size_t>(k - 1)] * (1.0 - lambda);
    }

    const int p_start = (rounds % 2 == 1) ? (rounds + 1) / 2 : rounds / 2 + 1;
    KahanSum sum;
    for (int p = p_start; p <= rounds; ++p) {
        const double weight = static_cast<double>(binomial(rounds, p));
        sum.add(weight * (lam_pow[static_cast<size_t>(p)] * bar_pow[static_cast<size_t>(rounds - p)] -
                          lam_pow[static_cast<size_t>(rounds - p)] * bar_pow[static_cast<size_t>(p)]));
    }
    return 0.5 * (1.0 + sum.value());
}

long long lemma_binomial_sum(int n, int i) {
    if (n < 1 || n % 2 == 0) {
        throw RangeError("lemma_binomial_sum: n must be a positive odd integer");
    }
    if (n > kMaxBinaryRounds - 1) {
        throw RangeError("lemma_binomial_sum: n too large for exact arithmetic");
    }
    const int half = (n + 1) / 2;
    if (i < half || i > n) {
        throw RangeError("lemma_binomial_sum: i must lie in [(n+1)/2, n]");
    }
    int128 lhs = 0;
    for (int j = 0; j <= i - half; ++j) {
        const int128 term = binomial(i, j);
        lhs += (j % 2 == 0) ? term : -term;
    }
    int128 rhs = binomial(i - 1, (n - 1) / 2);
    if ((i - half) % 2 == 1) {
        rhs = -rhs;
    }
    if (lhs != rhs) {
        throw Error("lemma_binomial_sum: identity mismatch at n=" + std::to_string(n) +
                    ", i=" + std::to_string(i));
    }
    return static_cast<long long>(lhs);
}

double closed_form_nary(int rounds, int n_outcomes, double lambda) {
    if (n_outcomes < 2) {
        throw RangeError("closed_form_nary: need at least 2 outcomes");
    }
    if (rounds < 1 || rounds > 4) {
        throw UnsupportedRounds("closed_form_nary: no closed form for rounds = " +
                                std::to_string(rounds));
    }
    if (!(lambda >= 1.0 / n_outcomes && lambda <= 1.0)) {
        throw LambdaOutOfRange("lambda " + std::to_string(lambda) + " outside [1/" +
                               std::to_string(n_outcomes) + ", 1]");
    }
    const double nn = static_cast<double>(n_outcomes);
    switch (rounds) {
        case 1:
        case 2:
            return lambda;
        case 3: {
            const double poly = ((-nn * lambda + (nn + 1.0)) * lambda + (nn - 2.0));
            return lambda * poly / (nn - 1.0);
        }
        default: {
            const double c3 = 2.0 * nn * (nn - 2.0);
            const double c2 = 4.0 + 7.0 * nn - 5.0 * nn * nn;
            const double c1 = 3.0 * (nn * nn - 3.0);
            const double c0 = (nn - 2.0) * (nn - 3.0);
            const double poly = ((c3 * lambda + c2) * lambda + c1) * lambda + c0;
            return lambda * poly / ((nn - 1.0) * (nn - 1.0));
        }
    }
}

std::vector<ComparisonRow> compare_formula_vs_enumeration(int n_outcomes, int rounds,
                                                          std::vector<double> lambda_grid,
                                                          std::uint64_t budget) {
    if (n_outcomes < 2) {
        throw RangeError("compare_formula_vs_enumeration: need at least 2 outcomes");
    }
    if (rounds < 1) {
        throw RangeError("compare_formula_vs_enumeration: rounds must be >= 1");
    }
    if (n_outcomes >= 3 && rounds > 4) {
        throw UnsupportedRounds("no closed form for " + std::to_string(n_outcomes) +
                                " outcomes and " + std::to_string(rounds) + " rounds");
    }
    if (lambda_grid.empty()) {
        throw RangeError("compare_formula_vs_enumeration: empty lambda grid");
    }
    std::sort(lambda_grid.begin(), lambda_grid.end());

    std::vector<ComparisonRow> rows;
    rows.reserve(lambda_grid.size());
    for (double lambda : lambda_grid) {
        ComparisonRow row;
        row.lambda = lambda;
        row.formula = (n_outcomes == 2) ? closed_form_binary(rounds, lambda)
                                        : closed_form_nary(rounds, n_outcomes, lambda);
        DiscriminationEnsemble ensemble(n_outcomes, n_outcomes, lambda);
        row.enumeration = brute_force_best_success(ensemble, rounds, budget).probability;
        row.abs_diff = std::abs(row.formula - row.enumeration);
        rows.push_back(row);
    }

    const auto worst = std::max_element(
        rows.begin(), rows.end(),
        [](const ComparisonRow &a, const ComparisonRow &b) { return a.abs_diff < b.abs_diff; });
    if (worst->abs_diff >= kCompareTolerance) {
        throw ToleranceViolation("formula and enumeration differ by " +
                                     std::to_string(worst->abs_diff) + " at lambda = " +
                                     std::to_string(worst->lambda),
                                 *worst);
    }
    return rows;
}

}  // namespace qsd
