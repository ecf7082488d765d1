#pragma once

#include <string>

namespace qsd {

/// 128-bit signed integer. Theorem-polynomial coefficients overflow 64
/// bits well before the supported depth, and the alternating signs make
/// floating-point construction useless.
using int128 = __int128;

/// Exact binomial coefficient. Returns 0 for k < 0 or k > n; throws
/// RangeError for n < 0 or n > 120 (past which the multiplicative
/// recurrence would overflow 128 bits).
int128 binomial(int n, int k);

std::string int128_to_string(int128 v);

/// Nearest double of an int128, plus the exact residue as a second
/// double. The split is exact for |v| < 2^106, which covers every
/// coefficient this library produces.
struct SplitDouble {
    double hi;
    double lo;
};
SplitDouble split_int128(int128 v);

}  // namespace qsd
