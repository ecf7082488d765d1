#pragma once

#include <initializer_list>
#include <vector>

#include "qsd/errors.hpp"
#include "qsd/types.hpp"

namespace qsd {

/// An n-tuple of outcome labels (each in 1..N). The order never matters
/// for commutative observables; most quantities depend only on the
/// multiplicity vector.
struct OutcomeArray {
    std::vector<int> entries;

    OutcomeArray() = default;
    OutcomeArray(std::initializer_list<int> xs) : entries(xs) {}
    explicit OutcomeArray(std::vector<int> xs) : entries(std::move(xs)) {}

    int rounds() const { return static_cast<int>(entries.size()); }

    /// m(x, label): occurrences of `label` in the array.
    int multiplicity(int label) const;

    /// Multiplicities of labels 1..n_outcomes (index label-1). Throws
    /// BadOutcome if any entry falls outside 1..n_outcomes.
    std::vector<int> multiplicities(int n_outcomes) const;
};

/// Visits every array in {1..n_outcomes}^rounds in lexicographic order.
/// `fn` receives the current entries and the multiplicity vector indexed
/// by label (slot 0 unused). The fixed order makes folded sums
/// reproducible bit for bit.
template <typename Fn>
void for_each_outcome_array(int n_outcomes, int rounds, Fn &&fn) {
    if (n_outcomes < 2 || rounds < 1) {
        throw RangeError("for_each_outcome_array: need n_outcomes >= 2 and rounds >= 1");
    }
    std::vector<int> entries(static_cast<size_t>(rounds), 1);
    std::vector<int> mult(static_cast<size_t>(n_outcomes) + 1, 0);
    mult[1] = rounds;
    for (;;) {
        fn(static_cast<const std::vector<int> &>(entries),
           static_cast<const std::vector<int> &>(mult));
        int pos = rounds - 1;
        while (pos >= 0 && entries[static_cast<size_t>(pos)] == n_outcomes) {
            --mult[static_cast<size_t>(n_outcomes)];
            ++mult[1];
            entries[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        --mult[static_cast<size_t>(entries[static_cast<size_t>(pos)])];
        ++entries[static_cast<size_t>(pos)];
        ++mult[static_cast<size_t>(entries[static_cast<size_t>(pos)])];
    }
}

/// Effect of the n-round observable at outcome array x: the entrywise
/// product of the base rows, evaluated per multiplicity so the result is
/// bit-identical under permutations of x.
std::vector<double> n_round_effect(const CommutativeObservable &observable,
                                   const OutcomeArray &x);

/// lambda^m(x,j) * mu^(n - m(x,j)): the probability of array x when the
/// prepared state is the ensemble's state j.
double outcome_probability(const DiscriminationEnsemble &ensemble, int label,
                           const OutcomeArray &x);

/// General (non-diagonal) n-round effect built from repeated measurement
/// state updates rho -> sqrt(E) rho sqrt(E):
///   sqrt(E_1) ... sqrt(E_{n-1}) E_n sqrt(E_{n-1}) ... sqrt(E_1).
/// Serves as the cross-validation oracle for n_round_effect on
/// simultaneously diagonal inputs.
DenseEffect dense_luders_n_round(const std::vector<DenseEffect> &effects, const OutcomeArray &x);

/// Repeated measurement of a fixed commutative observable; effects are
/// computed on demand, never tabulated.
class NRoundObservable {
  public:
    NRoundObservable(CommutativeObservable base, int rounds);

    const CommutativeObservable &base() const { return base_; }
    int rounds() const { return rounds_; }
    std::vector<double> effect(const OutcomeArray &x) const;

  private:
    CommutativeObservable base_;
    int rounds_;
};

}  // namespace qsd
