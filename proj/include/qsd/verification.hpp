#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsd/discrimination.hpp"

namespace qsd {

struct CheckResult {
    std::string name;
    std::string params;
    double worst = 0.0;      // largest deviation from the check's requirement
    double tolerance = 0.0;  // the pinned acceptance threshold
    bool pass = false;
    std::string detail;
};

/// The standard battery of cross-validation checks, in fixed order:
///   1. binary rule of three (enumeration vs lambda and 3l^2 - 2l^3)
///   2. binary closed form vs enumeration at depth, plus even-round collapse
///   3. exact alternating-binomial identity sweep
///   4. ambiguity: multiplicity criterion vs direct trace equality
///   5. N-ary closed forms (rounds 2..4) vs enumeration
///   6. dense sequential-measurement oracle vs diagonal fast path
///   7. curve-shape properties of the emitted figures
///   8. qubit unsharp spin-x worked example, both effect routes
CheckResult check_binary_rule_of_three();
CheckResult check_binary_formula_depth(std::uint64_t budget = kDefaultEnumerationBudget);
CheckResult check_lemma_identity();
CheckResult check_ambiguity_equivalence();
CheckResult check_nary_formulas(std::uint64_t budget = kDefaultEnumerationBudget);
CheckResult check_dense_oracle_agreement();
CheckResult check_figure_properties();
CheckResult check_qubit_worked_example();

std::vector<CheckResult> default_verification_suite(
    std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace qsd
