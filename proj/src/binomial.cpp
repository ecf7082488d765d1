#include "qsd/binomial.hpp"

#include <algorithm>

#include "qsd/errors.hpp"

namespace qsd {

int128 binomial(int n, int k) {
    if (n < 0) {
        throw RangeError("binomial: negative n");
    }
    if (n > 120) {
        throw RangeError("binomial: n > 120 would overflow 128-bit arithmetic");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n - k + i) is always divisible by i: the running value is
        // the exact binomial C(n - k + i, i).
        r = r * (n - k + i) / i;
    }
    return r;
}

std::string int128_to_string(int128 v) {
    if (v == 0) {
        return "0";
    }
    const bool negative = v < 0;
    unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                   : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (negative) {
        digits.push_back('-');
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

SplitDouble split_int128(int128 v) {
    const double hi = static_cast<double>(v);
    const int128 residue = v - static_cast<int128>(hi);
    return SplitDouble{hi, static_cast<double>(residue)};
}

}  // namespace qsd
