#include "qsd/curves.hpp"

#include <algorithm>
#include <cstdio>

#include "qsd/closedform.hpp"

namespace qsd {

namespace {

constexpr int kDefaultGridSteps = 201;

std::vector<int> sorted_rounds(const CurveRequest &req) {
    if (req.rounds.empty()) {
        throw InvalidGrid("no round counts given");
    }
    for (int n : req.rounds) {
        if (n < 1) {
            throw InvalidGrid("round count " + std::to_string(n) + " must be >= 1");
        }
    }
    std::vector<int> rounds = req.rounds;
    std::sort(rounds.begin(), rounds.end());
    return rounds;
}

std::vector<double> uniform_grid(double lo, double hi, int steps) {
    std::vector<double> grid(static_cast<size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        grid[static_cast<size_t>(k)] =
            (k == steps - 1) ? hi : lo + k * (hi - lo) / (steps - 1);
    }
    return grid;
}

/// Resolves the request's lambda specification against [1/N, 1].
std::vector<double> resolve_lambda_grid(const CurveRequest &req, bool allow_default) {
    const double floor = 1.0 / req.n_outcomes;
    if (!req.lambdas.empty()) {
        std::vector<double> grid = req.lambdas;
        for (double v : grid) {
            if (!(v >= floor && v <= 1.0)) {
                throw InvalidGrid("lambda " + std::to_string(v) + " outside [1/" +
                                  std::to_string(req.n_outcomes) + ", 1]");
            }
        }
        std::sort(grid.begin(), grid.end());
        return grid;
    }
    if (req.lambda_steps != 0) {
        if (req.lambda_steps < 2) {
            throw InvalidGrid("lambda grid needs at least 2 steps");
        }
        if (!(req.lambda_min >= floor && req.lambda_max <= 1.0 &&
              req.lambda_min <= req.lambda_max)) {
            throw InvalidGrid("lambda range [" + std::to_string(req.lambda_min) + ", " +
                              std::to_string(req.lambda_max) + "] invalid for 1/N = " +
                              std::to_string(floor));
        }
        return uniform_grid(req.lambda_min, req.lambda_max, req.lambda_steps);
    }
    if (!allow_default) {
        throw InvalidGrid("this mode requires explicit lambda values");
    }
    return uniform_grid(floor, 1.0, kDefaultGridSteps);
}

}  // namespace

std::vector<CurveRow> run_binary_curve(const CurveRequest &req) {
    if (req.n_outcomes != 2) {
        throw InvalidGrid("binary-curve requires 2 outcomes");
    }
    const std::vector<int> rounds = sorted_rounds(req);
    const std::vector<double> grid = resolve_lambda_grid(req, /*allow_default=*/true);

    std::vector<CurveRow> rows;
    rows.reserve(grid.size() * rounds.size());
    for (double lambda : grid) {
        for (int n : rounds) {
            rows.push_back(CurveRow{lambda, n, closed_form_binary(n, lambda)});
        }
    }
    return rows;
}

std::vector<CurveRow> run_binary_vs_n(const CurveRequest &req) {
    if (req.n_outcomes != 2) {
        throw InvalidGrid("binary-vs-n requires 2 outcomes");
    }
    const std::vector<int> rounds = sorted_rounds(req);
    const int n_max = rounds.back();
    std::vector<double> lambdas = req.lambdas;
    if (lambdas.empty()) {
        throw InvalidGrid("binary-vs-n requires explicit lambda values");
    }
    for (double v : lambdas) {
        if (!(v >= 0.5 && v <= 1.0)) {
            throw InvalidGrid("lambda " + std::to_string(v) + " outside [1/2, 1]");
        }
    }
    std::sort(lambdas.begin(), lambdas.end());

    std::vector<CurveRow> rows;
    rows.reserve(static_cast<size_t>(n_max) * lambdas.size());
    for (int n = 1; n <= n_max; ++n) {
        for (double lambda : lambdas) {
            rows.push_back(CurveRow{lambda, n, closed_form_binary(n, lambda)});
        }
    }
    return rows;
}

std::vector<CurveRow> run_nary_curve(const CurveRequest &req) {
    if (req.n_outcomes < 2) {
        throw InvalidGrid("nary-curve requires at least 2 outcomes");
    }
    const std::vector<int> rounds = sorted_rounds(req);
    for (int n : rounds) {
        if (n > 4) {
            throw UnsupportedRounds("nary-curve has closed forms only for rounds <= 4");
        }
    }
    const std::vector<double> grid = resolve_lambda_grid(req, /*allow_default=*/true);

    std::vector<CurveRow> rows;
    rows.reserve(grid.size() * rounds.size());
    for (double lambda : grid) {
        for (int n : rounds) {
            rows.push_back(CurveRow{lambda, n, closed_form_nary(n, req.n_outcomes, lambda)});
        }
    }
    return rows;
}

std::vector<CurveRow> run_point(const CurveRequest &req) {
    if (req.n_outcomes < 2) {
        throw InvalidGrid("point requires at least 2 outcomes");
    }
    const std::vector<int> rounds = sorted_rounds(req);
    if (req.lambdas.empty()) {
        throw InvalidGrid("point requires explicit lambda values");
    }
    const std::vector<double> grid = resolve_lambda_grid(req, /*allow_default=*/false);

    std::vector<CurveRow> rows;
    rows.reserve(grid.size() * rounds.size());
    for (double lambda : grid) {
        for (int n : rounds) {
            double p;
            if (req.n_outcomes == 2) {
                p = closed_form_binary(n, lambda);
            } else if (n <= 4) {
                p = closed_form_nary(n, req.n_outcomes, lambda);
            } else {
                DiscriminationEnsemble ensemble(req.n_outcomes, req.n_outcomes, lambda);
                p = brute_force_best_success(ensemble, n, req.budget).probability;
            }
            rows.push_back(CurveRow{lambda, n, p});
        }
    }
    return rows;
}

std::vector<CheckResult> run_verify(const CurveRequest &req) {
    std::vector<CheckResult> checks = default_verification_suite(req.budget);

    const bool custom = !req.lambdas.empty() || req.lambda_steps != 0 || !req.rounds.empty();
    if (custom) {
        std::vector<double> grid = req.lambdas;
        if (grid.empty()) {
            if (req.lambda_steps < 2) {
                throw InvalidGrid("lambda grid needs at least 2 steps");
            }
            grid = uniform_grid(req.lambda_min, req.lambda_max, req.lambda_steps);
        }
        std::vector<int> rounds = req.rounds.empty() ? std::vector<int>{3} : req.rounds;
        for (int n : rounds) {
            CheckResult r;
            r.name = "formula-vs-enumeration (custom)";
            r.params = "N=" + std::to_string(req.n_outcomes) + ", n=" + std::to_string(n) +
                       ", " + std::to_string(grid.size()) + " lambda values";
            r.tolerance = 1e-10;
            try {
                const auto rows = compare_formula_vs_enumeration(req.n_outcomes, n, grid,
                                                                 req.budget);
                for (const auto &row : rows) {
                    r.worst = std::max(r.worst, row.abs_diff);
                }
                r.pass = true;
            } catch (const ToleranceViolation &e) {
                r.worst = e.worst.abs_diff;
                r.pass = false;
                r.detail = e.what();
            } catch (const Error &e) {
                r.pass = false;
                r.detail = e.what();
            }
            checks.push_back(std::move(r));
        }
    }
    return checks;
}

std::string format_significant(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string rows_to_csv(const std::vector<CurveRow> &rows) {
    std::string out = "lambda,n,p_succ\n";
    for (const CurveRow &row : rows) {
        out += format_significant(row.lambda);
        out += ',';
        out += std::to_string(row.rounds);
        out += ',';
        out += format_significant(row.p_succ);
        out += '\n';
    }
    return out;
}

std::string rows_to_json(const std::vector<CurveRow> &rows) {
    std::string out = "[\n";
    for (size_t k = 0; k < rows.size(); ++k) {
        out += "  {\"lambda\": " + format_significant(rows[k].lambda) +
               ", \"n\": " + std::to_string(rows[k].rounds) +
               ", \"p_succ\": " + format_significant(rows[k].p_succ) + "}";
        if (k + 1 < rows.size()) {
            out += ',';
        }
        out += '\n';
    }
    out += "]\n";
    return out;
}

std::string report_to_text(const std::vector<CheckResult> &checks) {
    std::string out;
    int passed = 0;
    for (const CheckResult &c : checks) {
        char line[256];
        std::snprintf(line, sizeof line, "%-4s  %-36s  worst %.3e  (tol %.0e)  %s\n",
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), c.worst, c.tolerance,
                      c.params.c_str());
        out += line;
        if (!c.detail.empty()) {
            out += "      " + c.detail + "\n";
        }
        passed += c.pass ? 1 : 0;
    }
    out += "RESULT: " + std::to_string(passed) + "/" + std::to_string(checks.size()) +
           " checks passed\n";
    return out;
}

bool all_passed(const std::vector<CheckResult> &checks) {
    for (const CheckResult &c : checks) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

}  // namespace qsd
