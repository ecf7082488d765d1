#include "qsd/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "qsd/numeric.hpp"

namespace qsd {

namespace {

std::uint64_t checked_array_count(int n_outcomes, int rounds, std::uint64_t budget) {
    std::uint64_t count = 1;
    for (int k = 0; k < rounds; ++k) {
        if (count > budget / static_cast<std::uint64_t>(n_outcomes)) {
            throw BudgetExceeded("enumeration of " + std::to_string(n_outcomes) + "^" +
                                 std::to_string(rounds) + " outcome arrays exceeds budget " +
                                 std::to_string(budget));
        }
        count *= static_cast<std::uint64_t>(n_outcomes);
    }
    return count;
}

int argmax_multiplicity(const std::vector<int> &mult_by_label) {
    int best_label = 1;
    int best = mult_by_label[1];
    for (int j = 2; j < static_cast<int>(mult_by_label.size()); ++j) {
        if (mult_by_label[static_cast<size_t>(j)] > best) {
            best = mult_by_label[static_cast<size_t>(j)];
            best_label = j;
        }
    }
    return best_label;
}

std::vector<double> power_table(double base, int max_exponent) {
    std::vector<double> t(static_cast<size_t>(max_exponent) + 1);
    t[0] = 1.0;
    for (int k = 1; k <= max_exponent; ++k) {
        t[static_cast<size_t>(k)] = t[static_cast<size_t>(k - 1)] * base;
    }
    return t;
}

}  // namespace

DeterministicKernel::DeterministicKernel(int n_outcomes, int rounds, AssignFn assign)
    : n_outcomes_(n_outcomes), rounds_(rounds), assign_(std::move(assign)) {
    if (n_outcomes_ < 2 || rounds_ < 1) {
        throw RangeError("DeterministicKernel: need n_outcomes >= 2 and rounds >= 1");
    }
    if (!assign_) {
        throw RangeError("DeterministicKernel: empty assignment function");
    }
}

int DeterministicKernel::assign(const OutcomeArray &x) const {
    if (x.rounds() != rounds_) {
        throw KernelDomainMismatch("kernel defined on " + std::to_string(rounds_) +
                                   "-round arrays, got " + std::to_string(x.rounds()));
    }
    for (int e : x.entries) {
        if (e < 1 || e > n_outcomes_) {
            throw BadOutcome("outcome " + std::to_string(e) + " outside kernel domain");
        }
    }
    const int label = assign_(x);
    if (label < 1 || label > n_outcomes_) {
        throw BadOutcome("kernel assigned label " + std::to_string(label) + " outside 1.." +
                         std::to_string(n_outcomes_));
    }
    return label;
}

DeterministicKernel optimal_kernel(const DiscriminationEnsemble &ensemble, int rounds) {
    if (rounds < 1) {
        throw RangeError("optimal_kernel: rounds must be >= 1");
    }
    const int n = ensemble.n_states();
    return DeterministicKernel(n, rounds, [n](const OutcomeArray &x) {
        const std::vector<int> m = x.multiplicities(n);
        int best_label = 1;
        for (int j = 2; j <= n; ++j) {
            if (m[static_cast<size_t>(j - 1)] > m[static_cast<size_t>(best_label - 1)]) {
                best_label = j;
            }
        }
        return best_label;
    });
}

PostProcessedObservable post_process(const CommutativeObservable &observable, int rounds,
                                     const DeterministicKernel &kernel) {
    if (kernel.n_outcomes() != observable.n_outcomes() || kernel.rounds() != rounds) {
        throw KernelDomainMismatch("kernel domain does not match observable and round count");
    }
    const int n = observable.n_outcomes();
    const int dim = observable.dim();

    std::vector<std::vector<KahanSum>> acc(static_cast<size_t>(n),
                                           std::vector<KahanSum>(static_cast<size_t>(dim)));
    OutcomeArray x;
    for_each_outcome_array(n, rounds, [&](const std::vector<int> &entries,
                                          const std::vector<int> &) {
        x.entries = entries;
        const int label = kernel.assign(x);
        const std::vector<double> eff = n_round_effect(observable, x);
        auto &row = acc[static_cast<size_t>(label - 1)];
        for (int i = 0; i < dim; ++i) {
            row[static_cast<size_t>(i)].add(eff[static_cast<size_t>(i)]);
        }
    });

    PostProcessedObservable out;
    out.n_outcomes = n;
    out.dim = dim;
    out.rounds = rounds;
    out.effects.assign(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(dim)));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < dim; ++i) {
            out.effects[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                acc[static_cast<size_t>(j)][static_cast<size_t>(i)].value();
        }
    }
    return out;
}

double success_probability(const DiscriminationEnsemble &ensemble,
                           const PostProcessedObservable &post) {
    if (post.n_outcomes != ensemble.n_states() || post.dim != ensemble.dim()) {
        throw KernelDomainMismatch("post-processed observable does not match ensemble");
    }
    double total = 0.0;
    for (int j = 1; j <= ensemble.n_states(); ++j) {
        total += post.effects[static_cast<size_t>(j - 1)][static_cast<size_t>(ensemble.support(j))];
    }
    return total / ensemble.n_states();
}

BruteForceResult brute_force_best_success(const DiscriminationEnsemble &ensemble, int rounds,
                                          std::uint64_t budget) {
    if (rounds < 1) {
        throw RangeError("brute_force_best_success: rounds must be >= 1");
    }
    const int n = ensemble.n_states();
    checked_array_count(n, rounds, budget);

    const std::vector<double> lam_pow = power_table(ensemble.lambda(), rounds);
    const std::vector<double> mu_pow = power_table(ensemble.mu(), rounds);

    KahanSum total;
    for_each_outcome_array(n, rounds,
                           [&](const std::vector<int> &, const std::vector<int> &mult) {
                               const int best = argmax_multiplicity(mult);
                               const int m = mult[static_cast<size_t>(best)];
                               total.add(lam_pow[static_cast<size_t>(m)] *
                                         mu_pow[static_cast<size_t>(rounds - m)]);
                           });

    return BruteForceResult{total.value() / n, optimal_kernel(ensemble, rounds)};
}

bool is_ambiguous(const DiscriminationEnsemble &ensemble, const OutcomeArray &x,
                  const std::vector<int> &subset) {
    if (subset.empty()) {
        throw RangeError("is_ambiguous: subset must be nonempty");
    }
    std::set<int> seen;
    for (int label : subset) {
        if (label < 1 || label > ensemble.n_states()) {
            throw RangeError("is_ambiguous: label " + std::to_string(label) + " outside 1.." +
                             std::to_string(ensemble.n_states()));
        }
        if (!seen.insert(label).second) {
            throw RangeError("is_ambiguous: subset labels must be distinct");
        }
    }
    if (ensemble.lambda() <= 1.0 / ensemble.n_states()) {
        throw DegenerateLambda(
            "lambda = 1/N makes every array ambiguous; the multiplicity criterion degenerates");
    }
    const std::vector<int> mult = x.multiplicities(ensemble.n_states());
    const int first = mult[static_cast<size_t>(subset.front() - 1)];
    for (int label : subset) {
        if (mult[static_cast<size_t>(label - 1)] != first) {
            return false;
        }
    }
    return true;
}

}  // namespace qsd
