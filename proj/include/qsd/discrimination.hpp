#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qsd/sequential.hpp"
#include "qsd/types.hpp"

namespace qsd {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// A deterministic Markov kernel: a total relabeling of outcome arrays in
/// {1..N}^n into state guesses 1..N. Backed by a function so that the
/// N^n-entry table is never materialized.
class DeterministicKernel {
  public:
    using AssignFn = std::function<int(const OutcomeArray &)>;

    DeterministicKernel(int n_outcomes, int rounds, AssignFn assign);

    int n_outcomes() const { return n_outcomes_; }
    int rounds() const { return rounds_; }

    /// Guessed state label for array x. Throws KernelDomainMismatch on a
    /// wrong-length array, BadOutcome on invalid entries or an assignment
    /// outside 1..N.
    int assign(const OutcomeArray &x) const;

  private:
    int n_outcomes_;
    int rounds_;
    AssignFn assign_;
};

/// N diagonal effects B(j), each the sum of the n-round effects of the
/// arrays relabeled into j.
struct PostProcessedObservable {
    int n_outcomes = 0;
    int dim = 0;
    int rounds = 0;
    std::vector<std::vector<double>> effects;  // index label-1
};

/// Maximum-likelihood relabeling: each array is assigned to the label of
/// largest multiplicity, ties broken toward the lowest label. Per-array
/// maximization is globally optimal because the success probability is
/// affine in the kernel weights with independent per-array constraints.
DeterministicKernel optimal_kernel(const DiscriminationEnsemble &ensemble, int rounds);

/// B(j) = sum over arrays assigned to j of the n-round effect.
PostProcessedObservable post_process(const CommutativeObservable &observable, int rounds,
                                     const DeterministicKernel &kernel);

/// Uniform-prior success probability (1/N) sum_j tr[rho_j B(j)].
double success_probability(const DiscriminationEnsemble &ensemble,
                           const PostProcessedObservable &post);

struct BruteForceResult {
    double probability;
    DeterministicKernel kernel;
};

/// Independent optimum by full enumeration: (1/N) sum over all N^n arrays
/// of the largest per-state probability. Throws BudgetExceeded when N^n
/// exceeds `budget`.
BruteForceResult brute_force_best_success(const DiscriminationEnsemble &ensemble, int rounds,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

/// True when the array cannot favor any state of `subset` over another,
/// i.e. all subset labels occur equally often in x. Requires
/// lambda > 1/N; at lambda = 1/N every array is ambiguous and the
/// multiplicity criterion degenerates (DegenerateLambda).
bool is_ambiguous(const DiscriminationEnsemble &ensemble, const OutcomeArray &x,
                  const std::vector<int> &subset);

}  // namespace qsd
