#include "qsd/sequential.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace qsd {

namespace {

double pow_int(double base, int exponent) {
    double v = 1.0;
    for (int k = 0; k < exponent; ++k) {
        v *= base;
    }
    return v;
}

void require_valid_array(const OutcomeArray &x, int n_outcomes) {
    if (x.rounds() < 1) {
        throw BadOutcome("outcome array is empty");
    }
    for (int e : x.entries) {
        if (e < 1 || e > n_outcomes) {
            throw BadOutcome("outcome " + std::to_string(e) + " outside 1.." +
                             std::to_string(n_outcomes));
        }
    }
}

}  // namespace

int OutcomeArray::multiplicity(int label) const {
    return static_cast<int>(std::count(entries.begin(), entries.end(), label));
}

std::vector<int> OutcomeArray::multiplicities(int n_outcomes) const {
    require_valid_array(*this, n_outcomes);
    std::vector<int> m(static_cast<size_t>(n_outcomes), 0);
    for (int e : entries) {
        ++m[static_cast<size_t>(e - 1)];
    }
    return m;
}

std::vector<double> n_round_effect(const CommutativeObservable &observable,
                                   const OutcomeArray &x) {
    const std::vector<int> mult = x.multiplicities(observable.n_outcomes());
    std::vector<double> out(static_cast<size_t>(observable.dim()), 1.0);
    for (int j = 1; j <= observable.n_outcomes(); ++j) {
        const int m = mult[static_cast<size_t>(j - 1)];
        if (m == 0) {
            continue;
        }
        const std::vector<double> &row = observable.row(j);
        for (int i = 0; i < observable.dim(); ++i) {
            out[static_cast<size_t>(i)] *= pow_int(row[static_cast<size_t>(i)], m);
        }
    }
    return out;
}

double outcome_probability(const DiscriminationEnsemble &ensemble, int label,
                           const OutcomeArray &x) {
    require_valid_array(x, ensemble.n_states());
    if (label < 1 || label > ensemble.n_states()) {
        throw BadOutcome("state label " + std::to_string(label) + " outside 1.." +
                         std::to_string(ensemble.n_states()));
    }
    const int m = x.multiplicity(label);
    return pow_int(ensemble.lambda(), m) * pow_int(ensemble.mu(), x.rounds() - m);
}

DenseEffect dense_luders_n_round(const std::vector<DenseEffect> &effects, const OutcomeArray &x) {
    if (effects.empty()) {
        throw NotPOVM("no effects given");
    }
    const int dim = effects.front().dim;
    Matrix sum(dim);
    for (const DenseEffect &e : effects) {
        if (e.dim != dim) {
            throw NotPOVM("effects have mismatched dimensions");
        }
        for (size_t k = 0; k < sum.a.size(); ++k) {
            sum.a[k] += e.matrix.a[k];
        }
    }
    if (identity_defect(sum) > kTolNorm) {
        throw NotPOVM("effects do not sum to the identity (defect " +
                      std::to_string(identity_defect(sum)) + ")");
    }
    require_valid_array(x, static_cast<int>(effects.size()));

    std::map<int, Matrix> sqrt_cache;
    const auto sqrt_of = [&](int label) -> const Matrix & {
        auto it = sqrt_cache.find(label);
        if (it == sqrt_cache.end()) {
            it = sqrt_cache.emplace(label, psd_sqrt(effects[static_cast<size_t>(label - 1)].matrix))
                     .first;
        }
        return it->second;
    };

    const int rounds = x.rounds();
    Matrix acc = effects[static_cast<size_t>(x.entries[static_cast<size_t>(rounds - 1)] - 1)].matrix;
    for (int k = rounds - 2; k >= 0; --k) {
        const Matrix &s = sqrt_of(x.entries[static_cast<size_t>(k)]);
        acc = multiply(s, multiply(acc, s));
    }
    return DenseEffect(std::move(acc));
}

NRoundObservable::NRoundObservable(CommutativeObservable base, int rounds)
    : base_(std::move(base)), rounds_(rounds) {
    if (rounds_ < 1) {
        throw RangeError("NRoundObservable: rounds must be >= 1");
    }
}

std::vector<double> NRoundObservable::effect(const OutcomeArray &x) const {
    if (x.rounds() != rounds_) {
        throw BadOutcome("outcome array has " + std::to_string(x.rounds()) +
                         " rounds, observable expects " + std::to_string(rounds_));
    }
    return n_round_effect(base_, x);
}

}  // namespace qsd
