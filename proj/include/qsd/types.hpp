#pragma once

#include <optional>
#include <vector>

#include "qsd/linalg.hpp"

namespace qsd {

// Numerical tolerances used by the validating constructors.
inline constexpr double kTolNorm = 1e-12;   // POVM normalization, column sums
inline constexpr double kTolTrace = 1e-12;  // state trace
inline constexpr double kTolHerm = 1e-10;   // hermiticity defect
inline constexpr double kTolEig = 1e-10;    // spectrum bounds

/// An effect: Hermitian d x d matrix with spectrum in [0, 1].
struct DenseEffect {
    int dim = 0;
    Matrix matrix;

    DenseEffect() = default;
    explicit DenseEffect(Matrix m);

    static DenseEffect diagonal(const std::vector<double> &entries);
    std::vector<double> diagonal_entries() const;
};

/// A density operator: Hermitian, positive semidefinite, unit trace.
struct DenseState {
    int dim = 0;
    Matrix matrix;

    DenseState() = default;
    explicit DenseState(Matrix m);

    static DenseState pure_basis_state(int dim, int basis_index);
    /// tr[rho E]
    double expectation(const DenseEffect &effect) const;
};

/// An N-outcome observable whose effects pairwise commute, stored as the
/// N x d table of eigenvalues in the shared eigenbasis. Outcome labels are
/// 1..N; basis indices are 0..d-1. Immutable after construction.
class CommutativeObservable {
  public:
    CommutativeObservable(int n_outcomes, int dim, std::vector<std::vector<double>> eig_table);

    int n_outcomes() const { return n_outcomes_; }
    int dim() const { return dim_; }
    const std::vector<double> &row(int label) const;
    double eigenvalue(int label, int basis_index) const;
    const std::vector<std::vector<double>> &eig_table() const { return eig_table_; }

  private:
    int n_outcomes_;
    int dim_;
    std::vector<std::vector<double>> eig_table_;
};

/// N mutually orthogonal pure target states (basis vectors of the shared
/// eigenbasis) together with the unsharpness lambda of the measuring
/// observable. mu = (1 - lambda)/(N - 1) is derived. Immutable.
class DiscriminationEnsemble {
  public:
    DiscriminationEnsemble(int n_states, int dim, double lambda,
                           std::optional<std::vector<int>> support_index = std::nullopt);

    int n_states() const { return n_states_; }
    int dim() const { return dim_; }
    double lambda() const { return lambda_; }
    double mu() const { return mu_; }
    /// Basis index carrying state `label` (labels 1..N).
    int support(int label) const;
    const std::vector<int> &support_index() const { return support_index_; }

  private:
    int n_states_;
    int dim_;
    double lambda_;
    double mu_;
    std::vector<int> support_index_;
};

struct UniformStructure {
    double lambda = 0.0;
    double mu = 0.0;
    /// Basis indices not pinned by any target-state support; their
    /// eigenvalues are a free completion choice (1/N in our constructor).
    std::vector<int> free_columns;
};

/// Builds the uniformly noisy N-outcome observable with top eigenvalue
/// lambda on each target support and (1 - lambda)/(N - 1) on the others.
/// When `sharp` is given it must be a projection-valued eigen-table D and
/// the result is (lambda - mu) D(j) + mu I. Without it, D(j) projects onto
/// basis vector j-1 and basis directions beyond the first N are filled
/// with the symmetric completion 1/N.
CommutativeObservable make_uniform_noisy_observable(
    int n_outcomes, double lambda, int dim,
    const std::optional<std::vector<std::vector<double>>> &sharp = std::nullopt);

/// Extracts (lambda, mu) from an observable claimed to have the uniform
/// structure over the ensemble's supports, checking that lambda is each
/// row's maximum, mu its minimum, and mu = (1 - lambda)/(N - 1). Throws
/// StructureViolation naming the first offending (label, basis) pair.
UniformStructure validate_uniform_structure(const CommutativeObservable &observable,
                                            const DiscriminationEnsemble &ensemble);

/// Embeds each row of the eigenvalue table as a diagonal matrix.
std::vector<DenseEffect> to_dense(const CommutativeObservable &observable);

}  // namespace qsd
