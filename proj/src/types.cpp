#include "qsd/types.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "qsd/errors.hpp"

namespace qsd {

DenseEffect::DenseEffect(Matrix m) : dim(m.dim), matrix(std::move(m)) {
    if (dim < 1) {
        throw RangeError("DenseEffect: dimension must be positive");
    }
    const double herm = hermiticity_defect(matrix);
    if (herm > kTolHerm) {
        throw RangeError("DenseEffect: hermiticity defect " + std::to_string(herm));
    }
    EigenSystem es = hermitian_eigensystem(matrix);
    for (double v : es.values) {
        if (v < -kTolEig || v > 1.0 + kTolEig) {
            throw RangeError("DenseEffect: eigenvalue " + std::to_string(v) + " outside [0, 1]");
        }
    }
}

DenseEffect DenseEffect::diagonal(const std::vector<double> &entries) {
    Matrix m(static_cast<int>(entries.size()));
    for (int i = 0; i < m.dim; ++i) {
        m.at(i, i) = entries[static_cast<size_t>(i)];
    }
    return DenseEffect(std::move(m));
}

std::vector<double> DenseEffect::diagonal_entries() const {
    std::vector<double> out(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        out[static_cast<size_t>(i)] = matrix.at(i, i).real();
    }
    return out;
}

DenseState::DenseState(Matrix m) : dim(m.dim), matrix(std::move(m)) {
    if (dim < 1) {
        throw RangeError("DenseState: dimension must be positive");
    }
    if (hermiticity_defect(matrix) > kTolHerm) {
        throw RangeError("DenseState: matrix is not Hermitian");
    }
    complexd tr{};
    for (int i = 0; i < dim; ++i) {
        tr += matrix.at(i, i);
    }
    if (std::abs(tr - complexd{1.0, 0.0}) > kTolTrace) {
        throw RangeError("DenseState: trace differs from 1 by " +
                         std::to_string(std::abs(tr - complexd{1.0, 0.0})));
    }
    EigenSystem es = hermitian_eigensystem(matrix);
    if (es.values.front() < -kTolEig) {
        throw RangeError("DenseState: negative eigenvalue " + std::to_string(es.values.front()));
    }
}

DenseState DenseState::pure_basis_state(int dim, int basis_index) {
    if (basis_index < 0 || basis_index >= dim) {
        throw RangeError("DenseState: basis index out of range");
    }
    Matrix m(dim);
    m.at(basis_index, basis_index) = 1.0;
    return DenseState(std::move(m));
}

double DenseState::expectation(const DenseEffect &effect) const {
    if (effect.dim != dim) {
        throw RangeError("expectation: dimension mismatch");
    }
    complexd tr{};
    for (int r = 0; r < dim; ++r) {
        for (int k = 0; k < dim; ++k) {
            tr += matrix.at(r, k) * effect.matrix.at(k, r);
        }
    }
    return tr.real();
}

CommutativeObservable::CommutativeObservable(int n_outcomes, int dim,
                                             std::vector<std::vector<double>> eig_table)
    : n_outcomes_(n_outcomes), dim_(dim), eig_table_(std::move(eig_table)) {
    if (n_outcomes_ < 2) {
        throw RangeError("CommutativeObservable: need at least 2 outcomes");
    }
    if (dim_ < n_outcomes_) {
        throw DimensionTooSmall("CommutativeObservable: dim " + std::to_string(dim_) +
                                " < n_outcomes " + std::to_string(n_outcomes_));
    }
    if (static_cast<int>(eig_table_.size()) != n_outcomes_) {
        throw RangeError("CommutativeObservable: eig_table must have one row per outcome");
    }
    for (const auto &row : eig_table_) {
        if (static_cast<int>(row.size()) != dim_) {
            throw RangeError("CommutativeObservable: eig_table row length != dim");
        }
        for (double v : row) {
            if (!(v >= 0.0 && v <= 1.0)) {
                throw RangeError("CommutativeObservable: eigenvalue " + std::to_string(v) +
                                 " outside [0, 1]");
            }
        }
    }
    for (int i = 0; i < dim_; ++i) {
        double col = 0.0;
        for (int j = 0; j < n_outcomes_; ++j) {
            col += eig_table_[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
        if (std::abs(col - 1.0) > kTolNorm) {
            throw NotPOVM("CommutativeObservable: column " + std::to_string(i) + " sums to " +
                          std::to_string(col));
        }
    }
}

const std::vector<double> &CommutativeObservable::row(int label) const {
    if (label < 1 || label > n_outcomes_) {
        throw BadOutcome("outcome label " + std::to_string(label) + " outside 1.." +
                         std::to_string(n_outcomes_));
    }
    return eig_table_[static_cast<size_t>(label - 1)];
}

double CommutativeObservable::eigenvalue(int label, int basis_index) const {
    const auto &r = row(label);
    if (basis_index < 0 || basis_index >= dim_) {
        throw RangeError("basis index out of range");
    }
    return r[static_cast<size_t>(basis_index)];
}

DiscriminationEnsemble::DiscriminationEnsemble(int n_states, int dim, double lambda,
                                               std::optional<std::vector<int>> support_index)
    : n_states_(n_states), dim_(dim), lambda_(lambda) {
    if (n_states_ < 2) {
        throw RangeError("DiscriminationEnsemble: need at least 2 states");
    }
    if (dim_ < n_states_) {
        throw DimensionTooSmall("DiscriminationEnsemble: dim < n_states");
    }
    if (!(lambda_ >= 1.0 / n_states_ && lambda_ <= 1.0)) {
        throw LambdaOutOfRange("lambda " + std::to_string(lambda_) + " outside [1/" +
                               std::to_string(n_states_) + ", 1]");
    }
    mu_ = (1.0 - lambda_) / (n_states_ - 1);
    if (support_index.has_value()) {
        support_index_ = std::move(*support_index);
    } else {
        support_index_.resize(static_cast<size_t>(n_states_));
        for (int j = 0; j < n_states_; ++j) {
            support_index_[static_cast<size_t>(j)] = j;
        }
    }
    if (static_cast<int>(support_index_.size()) != n_states_) {
        throw RangeError("DiscriminationEnsemble: support_index must have one entry per state");
    }
    std::set<int> seen;
    for (int idx : support_index_) {
        if (idx < 0 || idx >= dim_) {
            throw RangeError("DiscriminationEnsemble: support index out of range");
        }
        if (!seen.insert(idx).second) {
            throw RangeError("DiscriminationEnsemble: support indices must be pairwise distinct");
        }
    }
}

int DiscriminationEnsemble::support(int label) const {
    if (label < 1 || label > n_states_) {
        throw BadOutcome("state label " + std::to_string(label) + " outside 1.." +
                         std::to_string(n_states_));
    }
    return support_index_[static_cast<size_t>(label - 1)];
}

namespace {

void check_sharp_table(const std::vector<std::vector<double>> &sharp, int n_outcomes, int dim) {
    if (static_cast<int>(sharp.size()) != n_outcomes) {
        throw InvalidSharpObservable("sharp eigen-table must have one row per outcome");
    }
    for (const auto &row : sharp) {
        if (static_cast<int>(row.size()) != dim) {
            throw InvalidSharpObservable("sharp eigen-table row length != dim");
        }
        bool any_one = false;
        for (double v : row) {
            if (v != 0.0 && v != 1.0) {
                throw InvalidSharpObservable("sharp eigen-table entries must be 0 or 1");
            }
            any_one = any_one || (v == 1.0);
        }
        if (!any_one) {
            throw InvalidSharpObservable("sharp eigen-table has an all-zero effect");
        }
    }
    for (int i = 0; i < dim; ++i) {
        double col = 0.0;
        for (int j = 0; j < n_outcomes; ++j) {
            col += sharp[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
        if (col != 1.0) {
            throw InvalidSharpObservable("sharp eigen-table column " + std::to_string(i) +
                                         " does not sum to 1");
        }
    }
}

}  // namespace

CommutativeObservable make_uniform_noisy_observable(
    int n_outcomes, double lambda, int dim,
    const std::optional<std::vector<std::vector<double>>> &sharp) {
    if (n_outcomes < 2) {
        throw RangeError("make_uniform_noisy_observable: need at least 2 outcomes");
    }
    if (dim < n_outcomes) {
        throw DimensionTooSmall("make_uniform_noisy_observable: dim " + std::to_string(dim) +
                                " < n_outcomes " + std::to_string(n_outcomes));
    }
    if (!(lambda >= 1.0 / n_outcomes && lambda <= 1.0)) {
        throw LambdaOutOfRange("lambda " + std::to_string(lambda) + " outside [1/" +
                               std::to_string(n_outcomes) + ", 1]");
    }
    const double mu = (1.0 - lambda) / (n_outcomes - 1);

    std::vector<std::vector<double>> table(static_cast<size_t>(n_outcomes),
                                           std::vector<double>(static_cast<size_t>(dim)));
    if (sharp.has_value()) {
        check_sharp_table(*sharp, n_outcomes, dim);
        for (int j = 0; j < n_outcomes; ++j) {
            for (int i = 0; i < dim; ++i) {
                const double dji = (*sharp)[static_cast<size_t>(j)][static_cast<size_t>(i)];
                table[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                    (lambda - mu) * dji + mu;
            }
        }
    } else {
        // Default sharp discriminator projects state j onto basis vector
        // j-1; directions beyond the first N take the symmetric 1/N fill.
        for (int j = 0; j < n_outcomes; ++j) {
            for (int i = 0; i < dim; ++i) {
                double v;
                if (i >= n_outcomes) {
                    v = 1.0 / n_outcomes;
                } else {
                    v = (i == j) ? lambda : mu;
                }
                table[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
            }
        }
    }
    return CommutativeObservable(n_outcomes, dim, std::move(table));
}

UniformStructure validate_uniform_structure(const CommutativeObservable &observable,
                                            const DiscriminationEnsemble &ensemble) {
    if (observable.n_outcomes() != ensemble.n_states() || observable.dim() != ensemble.dim()) {
        throw StructureViolation("observable and ensemble disagree on N or d");
    }
    const int n = observable.n_outcomes();

    const double lambda = observable.eigenvalue(1, ensemble.support(1));
    const double expected_mu = (1.0 - lambda) / (n - 1);

    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n; ++i) {
            const double entry = observable.eigenvalue(j, ensemble.support(i));
            const double expected = (i == j) ? lambda : expected_mu;
            if (std::abs(entry - expected) > kTolNorm) {
                throw StructureViolation("entry (label " + std::to_string(j) + ", support of " +
                                         std::to_string(i) + ") is " + std::to_string(entry) +
                                         ", expected " + std::to_string(expected));
            }
        }
        const auto &row = observable.row(j);
        const double row_max = *std::max_element(row.begin(), row.end());
        const double row_min = *std::min_element(row.begin(), row.end());
        if (std::abs(row_max - lambda) > kTolNorm) {
            throw StructureViolation("row " + std::to_string(j) + " maximum " +
                                     std::to_string(row_max) + " differs from lambda");
        }
        if (std::abs(row_min - expected_mu) > kTolNorm) {
            throw StructureViolation("row " + std::to_string(j) + " minimum " +
                                     std::to_string(row_min) + " differs from mu");
        }
    }

    UniformStructure out;
    out.lambda = lambda;
    out.mu = expected_mu;
    std::set<int> supports(ensemble.support_index().begin(), ensemble.support_index().end());
    for (int i = 0; i < observable.dim(); ++i) {
        if (supports.count(i) == 0) {
            out.free_columns.push_back(i);
        }
    }
    return out;
}

std::vector<DenseEffect> to_dense(const CommutativeObservable &observable) {
    std::vector<DenseEffect> out;
    out.reserve(static_cast<size_t>(observable.n_outcomes()));
    for (int j = 1; j <= observable.n_outcomes(); ++j) {
        out.push_back(DenseEffect::diagonal(observable.row(j)));
    }
    return out;
}

}  // namespace qsd
