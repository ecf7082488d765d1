#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsd/curves.hpp"

namespace {

// Exit codes: 0 success, 1 validation error, 2 verification failure.

struct CliOptions {
    qsd::CurveRequest request;
    std::string lambda_range;  // MIN:MAX:STEPS
    std::string format = "csv";
};

void parse_lambda_range(const std::string &spec, qsd::CurveRequest &request) {
    const size_t first = spec.find(':');
    const size_t second = spec.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos) {
        throw qsd::InvalidGrid("--lambda-range expects MIN:MAX:STEPS");
    }
    try {
        request.lambda_min = std::stod(spec.substr(0, first));
        request.lambda_max = std::stod(spec.substr(first + 1, second - first - 1));
        request.lambda_steps = std::stoi(spec.substr(second + 1));
    } catch (const std::exception &) {
        throw qsd::InvalidGrid("--lambda-range expects numeric MIN:MAX:STEPS");
    }
}

void add_common_options(CLI::App *cmd, CliOptions &opts) {
    cmd->add_option("--n-outcomes", opts.request.n_outcomes, "Number of outcomes / states N")
        ->check(CLI::Range(2, 1000));
    cmd->add_option("--rounds", opts.request.rounds, "Measurement round counts (comma list)")
        ->delimiter(',');
    cmd->add_option("--lambda", opts.request.lambdas, "Explicit lambda values (comma list)")
        ->delimiter(',');
    cmd->add_option("--lambda-range", opts.lambda_range, "Uniform lambda grid MIN:MAX:STEPS");
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.request.out, "Output path (default: standard output)");
    cmd->add_option("--budget", opts.request.budget,
                    "Maximum number of enumerated outcome arrays");
}

void emit(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw qsd::Error("cannot open output file: " + path);
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

int run(CliOptions &opts) {
    qsd::CurveRequest &req = opts.request;
    if (!opts.lambda_range.empty()) {
        parse_lambda_range(opts.lambda_range, req);
        if (!req.lambdas.empty()) {
            throw qsd::InvalidGrid("give either --lambda or --lambda-range, not both");
        }
    }
    req.format = (opts.format == "json") ? qsd::OutputFormat::Json : qsd::OutputFormat::Csv;

    if (req.mode == qsd::CurveMode::Verify) {
        const std::vector<qsd::CheckResult> checks = qsd::run_verify(req);
        emit(qsd::report_to_text(checks), req.out);
        return qsd::all_passed(checks) ? 0 : 2;
    }

    std::vector<qsd::CurveRow> rows;
    switch (req.mode) {
        case qsd::CurveMode::BinaryCurve:
            if (req.rounds.empty()) req.rounds = {1, 21, 41};
            rows = qsd::run_binary_curve(req);
            break;
        case qsd::CurveMode::BinaryVsN:
            if (req.rounds.empty()) req.rounds = {50};
            rows = qsd::run_binary_vs_n(req);
            break;
        case qsd::CurveMode::NaryCurve:
            if (req.rounds.empty()) req.rounds = {1, 3, 4};
            rows = qsd::run_nary_curve(req);
            break;
        default:
            rows = qsd::run_point(req);
            break;
    }
    emit(req.format == qsd::OutputFormat::Json ? qsd::rows_to_json(rows)
                                               : qsd::rows_to_csv(rows),
         req.out);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{
        "Minimum-error discrimination of orthogonal states by repeated unsharp measurements"};
    app.require_subcommand(1);

    CliOptions opts;
    auto *binary_curve = app.add_subcommand(
        "binary-curve", "Binary success probability vs lambda (default rounds 1,21,41)");
    auto *binary_vs_n = app.add_subcommand(
        "binary-vs-n", "Binary success probability for n = 1..max(rounds) at fixed lambdas");
    auto *nary_curve = app.add_subcommand(
        "nary-curve", "N-outcome success probability vs lambda for rounds in {1,2,3,4}");
    auto *point = app.add_subcommand("point", "Success probability at explicit (lambda, n) points");
    auto *verify = app.add_subcommand(
        "verify", "Run the cross-validation suite; exit 2 if any check fails");
    for (CLI::App *cmd : {binary_curve, binary_vs_n, nary_curve, point, verify}) {
        add_common_options(cmd, opts);
    }
    binary_curve->callback([&] { opts.request.mode = qsd::CurveMode::BinaryCurve; });
    binary_vs_n->callback([&] { opts.request.mode = qsd::CurveMode::BinaryVsN; });
    nary_curve->callback([&] { opts.request.mode = qsd::CurveMode::NaryCurve; });
    point->callback([&] { opts.request.mode = qsd::CurveMode::Point; });
    verify->callback([&] { opts.request.mode = qsd::CurveMode::Verify; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    try {
        return run(opts);
    } catch (const qsd::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
