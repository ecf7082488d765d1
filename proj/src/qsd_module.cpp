#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsd/closedform.hpp"
#include "qsd/curves.hpp"
#include "qsd/sequential.hpp"

namespace py = pybind11;
using namespace qsd;

namespace {

OutcomeArray to_array(const std::vector<int> &entries) { return OutcomeArray(entries); }

std::vector<std::vector<complexd>> matrix_rows(const Matrix &m) {
    std::vector<std::vector<complexd>> rows(static_cast<size_t>(m.dim));
    for (int r = 0; r < m.dim; ++r) {
        rows[static_cast<size_t>(r)].assign(m.a.begin() + static_cast<long>(r) * m.dim,
                                            m.a.begin() + static_cast<long>(r + 1) * m.dim);
    }
    return rows;
}

py::object int128_to_py(int128 v) {
    return py::module_::import("builtins").attr("int")(int128_to_string(v));
}

}  // namespace

PYBIND11_MODULE(_qsd, m) {
    m.doc() = "Minimum-error discrimination of orthogonal states via repeated unsharp "
              "measurements: closed forms, enumeration, and cross-validation oracles.";

    py::register_exception<Error>(m, "Error");

    py::class_<CommutativeObservable>(m, "CommutativeObservable")
        .def(py::init<int, int, std::vector<std::vector<double>>>(), py::arg("n_outcomes"),
             py::arg("dim"), py::arg("eig_table"))
        .def_property_readonly("n_outcomes", &CommutativeObservable::n_outcomes)
        .def_property_readonly("dim", &CommutativeObservable::dim)
        .def_property_readonly("eig_table", &CommutativeObservable::eig_table)
        .def("row", &CommutativeObservable::row, py::arg("label"))
        .def("eigenvalue", &CommutativeObservable::eigenvalue, py::arg("label"),
             py::arg("basis_index"));

    py::class_<DiscriminationEnsemble>(m, "DiscriminationEnsemble")
        .def(py::init<int, int, double, std::optional<std::vector<int>>>(), py::arg("n_states"),
             py::arg("dim"), py::arg("lambda_"), py::arg("support_index") = std::nullopt)
        .def_property_readonly("n_states", &DiscriminationEnsemble::n_states)
        .def_property_readonly("dim", &DiscriminationEnsemble::dim)
        .def_property_readonly("lambda_", &DiscriminationEnsemble::lambda)
        .def_property_readonly("mu", &DiscriminationEnsemble::mu)
        .def("support", &DiscriminationEnsemble::support, py::arg("label"));

    py::class_<DenseEffect>(m, "DenseEffect")
        .def_property_readonly("dim", [](const DenseEffect &e) { return e.dim; })
        .def_property_readonly("matrix",
                               [](const DenseEffect &e) { return matrix_rows(e.matrix); })
        .def("diagonal_entries", &DenseEffect::diagonal_entries);

    py::class_<UniformStructure>(m, "UniformStructure")
        .def_property_readonly("lambda_", [](const UniformStructure &s) { return s.lambda; })
        .def_property_readonly("mu", [](const UniformStructure &s) { return s.mu; })
        .def_property_readonly("free_columns",
                               [](const UniformStructure &s) { return s.free_columns; });

    py::class_<DeterministicKernel>(m, "DeterministicKernel")
        .def(py::init([](int n_outcomes, int rounds, const std::function<int(std::vector<int>)> &f) {
                 return DeterministicKernel(n_outcomes, rounds, [f](const OutcomeArray &x) {
                     return f(x.entries);
                 });
             }),
             py::arg("n_outcomes"), py::arg("rounds"), py::arg("assign"))
        .def_property_readonly("n_outcomes", &DeterministicKernel::n_outcomes)
        .def_property_readonly("rounds", &DeterministicKernel::rounds)
        .def("assign", [](const DeterministicKernel &k, const std::vector<int> &x) {
            return k.assign(to_array(x));
        });

    py::class_<PostProcessedObservable>(m, "PostProcessedObservable")
        .def_readonly("n_outcomes", &PostProcessedObservable::n_outcomes)
        .def_readonly("dim", &PostProcessedObservable::dim)
        .def_readonly("rounds", &PostProcessedObservable::rounds)
        .def_readonly("effects", &PostProcessedObservable::effects);

    m.def("make_uniform_noisy_observable", &make_uniform_noisy_observable, py::arg("n_outcomes"),
          py::arg("lambda_"), py::arg("dim"), py::arg("sharp") = std::nullopt);
    m.def("validate_uniform_structure", &validate_uniform_structure, py::arg("observable"),
          py::arg("ensemble"));
    m.def("to_dense", &to_dense, py::arg("observable"));

    m.def(
        "n_round_effect",
        [](const CommutativeObservable &a, const std::vector<int> &x) {
            return n_round_effect(a, to_array(x));
        },
        py::arg("observable"), py::arg("outcomes"));
    m.def(
        "outcome_probability",
        [](const DiscriminationEnsemble &e, int label, const std::vector<int> &x) {
            return outcome_probability(e, label, to_array(x));
        },
        py::arg("ensemble"), py::arg("label"), py::arg("outcomes"));
    m.def(
        "dense_luders_n_round",
        [](const std::vector<DenseEffect> &effects, const std::vector<int> &x) {
            return dense_luders_n_round(effects, to_array(x));
        },
        py::arg("effects"), py::arg("outcomes"));

    m.def("optimal_kernel", &optimal_kernel, py::arg("ensemble"), py::arg("rounds"));
    m.def("post_process", &post_process, py::arg("observable"), py::arg("rounds"),
          py::arg("kernel"));
    m.def("success_probability", &success_probability, py::arg("ensemble"), py::arg("post"));
    m.def(
        "brute_force_best_success",
        [](const DiscriminationEnsemble &e, int rounds, std::uint64_t budget) {
            const BruteForceResult r = brute_force_best_success(e, rounds, budget);
            return py::make_tuple(r.probability, r.kernel);
        },
        py::arg("ensemble"), py::arg("rounds"), py::arg("budget") = kDefaultEnumerationBudget);
    m.def(
        "is_ambiguous",
        [](const DiscriminationEnsemble &e, const std::vector<int> &x,
           const std::vector<int> &subset) { return is_ambiguous(e, to_array(x), subset); },
        py::arg("ensemble"), py::arg("outcomes"), py::arg("subset"));

    m.def("closed_form_binary", &closed_form_binary, py::arg("rounds"), py::arg("lambda_"));
    m.def("binary_sum_form", &binary_sum_form, py::arg("rounds"), py::arg("lambda_"));
    m.def("lemma_binomial_sum", &lemma_binomial_sum, py::arg("n"), py::arg("i"));
    m.def("closed_form_nary", &closed_form_nary, py::arg("rounds"), py::arg("n_outcomes"),
          py::arg("lambda_"));
    m.def(
        "binary_success_coefficients",
        [](int rounds) {
            const BinarySuccessFormula f = BinarySuccessFormula::for_rounds(rounds);
            py::list out;
            for (const int128 c : f.coefficients) {
                out.append(int128_to_py(c));
            }
            return py::make_tuple(f.rounds, out);
        },
        py::arg("rounds"),
        "Effective odd round count and the exact polynomial coefficients for "
        "lambda^((n+1)/2) .. lambda^n.");
    m.def(
        "compare_formula_vs_enumeration",
        [](int n_outcomes, int rounds, std::vector<double> grid, std::uint64_t budget) {
            py::list out;
            for (const ComparisonRow &row :
                 compare_formula_vs_enumeration(n_outcomes, rounds, std::move(grid), budget)) {
                out.append(py::make_tuple(row.lambda, row.formula, row.enumeration, row.abs_diff));
            }
            return out;
        },
        py::arg("n_outcomes"), py::arg("rounds"), py::arg("lambda_grid"),
        py::arg("budget") = kDefaultEnumerationBudget);

    m.attr("__version__") = "0.1.0";
}
