#pragma once

#include <cstdint>
#include <vector>

#include "qsd/binomial.hpp"
#include "qsd/discrimination.hpp"
#include "qsd/errors.hpp"

namespace qsd {

/// The optimal binary success polynomial for an odd number of rounds n:
///   P(lambda) = sum_{i=(n+1)/2}^{n} C(n,i) C(i-1,(n-1)/2) (-1)^(i-(n+1)/2) lambda^i.
/// An even round count collapses to the preceding odd one. Coefficients
/// are exact integers; evaluation uses a compensated Horner scheme so the
/// large alternating terms cancel without losing the 1e-12 targets.
struct BinarySuccessFormula {
    int rounds = 1;                      // effective odd n
    std::vector<int128> coefficients;    // c_i for i = (rounds+1)/2 .. rounds

    static BinarySuccessFormula for_rounds(int rounds);
    double evaluate(double lambda) const;
};

/// Optimal binary n-round success probability via the closed-form
/// polynomial. Requires 1/2 <= lambda <= 1 and 1 <= rounds <= 64.
double closed_form_binary(int rounds, double lambda);

/// The same quantity through the independent route
///   1/2 (1 + sum_p C(n,p) (lambda^p (1-lambda)^(n-p) - lambda^(n-p) (1-lambda)^p))
/// with p over the majority range (p >= (n+1)/2 odd, p >= n/2+1 even).
double binary_sum_form(int rounds, double lambda);

/// Exact alternating binomial identity used by the binary formula: for
/// odd n and (n+1)/2 <= i <= n,
///   sum_{j=0}^{i-(n+1)/2} C(i,j) (-1)^j  ==  C(i-1,(n-1)/2) (-1)^(i-(n+1)/2).
/// Both sides are computed in exact integers and compared; the common
/// value is returned. RangeError outside the stated domain.
long long lemma_binomial_sum(int n, int i);

/// N-outcome optimal success probability for 1 <= rounds <= 4:
///   n=1,2: lambda
///   n=3:   lambda ((N-2) + (N+1) lambda - N lambda^2) / (N-1)
///   n=4:   lambda ((N-2)(N-3) + 3(N^2-3) lambda + (4+7N-5N^2) lambda^2
///                  + 2N(N-2) lambda^3) / (N-1)^2
double closed_form_nary(int rounds, int n_outcomes, double lambda);

struct ComparisonRow {
    double lambda = 0.0;
    double formula = 0.0;
    double enumeration = 0.0;
    double abs_diff = 0.0;
};

/// Closed form vs full enumeration over the lambda grid, sorted by
/// lambda. Throws if any row deviates by 1e-10 or more.
struct ToleranceViolation : Error {
    ComparisonRow worst;
    ToleranceViolation(const std::string &msg, ComparisonRow row) : Error(msg), worst(row) {}
};

std::vector<ComparisonRow> compare_formula_vs_enumeration(
    int n_outcomes, int rounds, std::vector<double> lambda_grid,
    std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace qsd
