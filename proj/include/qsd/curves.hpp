#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsd/verification.hpp"

namespace qsd {

enum class CurveMode { BinaryCurve, BinaryVsN, NaryCurve, Point, Verify };
enum class OutputFormat { Csv, Json };

/// Parameters for one curve/verification run. A lambda grid is either the
/// explicit `lambdas` list or the uniform range (min, max, steps); when
/// both are empty the curve modes default to 201 points over [1/N, 1].
struct CurveRequest {
    CurveMode mode = CurveMode::BinaryCurve;
    int n_outcomes = 2;
    std::vector<int> rounds;
    std::vector<double> lambdas;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    int lambda_steps = 0;  // 0 = no range given
    OutputFormat format = OutputFormat::Csv;
    std::string out;  // empty = standard output
    std::uint64_t budget = kDefaultEnumerationBudget;
};

struct CurveRow {
    double lambda = 0.0;
    int rounds = 0;
    double p_succ = 0.0;
};

/// Success probability vs lambda for each requested round count (N = 2).
/// Rows ordered lambda ascending, then rounds ascending.
std::vector<CurveRow> run_binary_curve(const CurveRequest &req);

/// Success probability vs round count n = 1..max(rounds) at the given
/// lambdas (N = 2). Rows ordered n ascending, then lambda ascending.
std::vector<CurveRow> run_binary_vs_n(const CurveRequest &req);

/// N-outcome curves for rounds in {1,2,3,4}. Rows ordered lambda
/// ascending, then rounds ascending.
std::vector<CurveRow> run_nary_curve(const CurveRequest &req);

/// Single-point queries: closed form where one exists (N = 2 any depth,
/// otherwise rounds <= 4), full enumeration within budget elsewhere.
std::vector<CurveRow> run_point(const CurveRequest &req);

/// The default verification suite, plus a custom formula-vs-enumeration
/// comparison when the request carries explicit parameters.
std::vector<CheckResult> run_verify(const CurveRequest &req);

/// %.12g rendering used for every emitted number.
std::string format_significant(double v);

std::string rows_to_csv(const std::vector<CurveRow> &rows);
std::string rows_to_json(const std::vector<CurveRow> &rows);
std::string report_to_text(const std::vector<CheckResult> &checks);
bool all_passed(const std::vector<CheckResult> &checks);

}  // namespace qsd
