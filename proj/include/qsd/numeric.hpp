#pragma once

namespace qsd {

/// Kahan compensated accumulator. Enumerations over outcome arrays fold
/// millions of small terms; plain summation would drift past the 1e-12
/// agreement targets.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }

    double value() const { return sum; }
};

}  // namespace qsd
