#pragma once

#include <cstdint>

#include "goldbase/phicodec/phi_expansion.hpp"

namespace goldbase::phicodec {

// The intervals that partition the naturals by expansion shape:
// [0,1], then [L_{2n}, L_{2n+1}] at even index and
// [L_{2n+1}+1, L_{2n+2}-1] at odd index.
struct LucasInterval {
    int j;
    Nat lo;
    Nat hi;

    bool operator==(const LucasInterval&) const = default;
};

// The unique interval containing n (binary search over cached Lucas numbers).
LucasInterval interval_of(Nat n);

// Leftmost/rightmost digit positions shared by every N in the j-th interval:
// (2n, -2n) for j = 2n, (2n+1, -(2n+2)) for j = 2n+1.  For j = 0 the value
// (0, 0) is returned; it bounds the support of both members of [0,1].
struct IntervalBounds {
    int li;
    int ri;

    bool operator==(const IntervalBounds&) const = default;
};
IntervalBounds interval_bounds(int j);

// Classification of an odd interval [L_{2n+1}+1, L_{2n+2}-1], n >= 2, into
// its three consecutive pieces, with the offset convention of the expansion
// recursion:
//   I: N = L_{2n+1} + k,            k in [1, L_{2n-2}-1]
//   J: N = L_{2n+1} + L_{2n-2} + k, k in [0, L_{2n-3}]
//   K: N = L_{2n+1} + L_{2n-1} + k, k in [1, L_{2n-2}-1]
enum class OddKind { I, J, K };

struct OddSubinterval {
    OddKind kind;
    int n;
    Nat k;

    bool operator==(const OddSubinterval&) const = default;
};

// Throws std::domain_error for N in an even interval or in the first two odd
// intervals (the recursion starts at n = 2).
OddSubinterval subinterval_of(Nat n);

// The value whose expansion the odd-interval recursion reads from:
// L_{2n-1}+k for I and K, L_{2n-2}+k for J.
Nat odd_source_value(const OddSubinterval& s);

}  // namespace goldbase::phicodec
