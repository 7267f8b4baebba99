#pragma once

#include <cstdint>
#include <vector>

#include "goldbase/exactnum/golden_int.hpp"

namespace goldbase::phicodec {

// A number N accepted by the expansion routines fits in an unsigned 64-bit
// word; everything internal runs on unbounded integers.
using Nat = std::uint64_t;

// True iff no two positions are consecutive (digit pattern 11 forbidden).
// Input order is irrelevant; duplicates count as invalid.
bool validate(std::vector<int> candidate);

// Digit support of a base-phi word: the strictly decreasing list of positions
// i with d_i = 1.  Empty support encodes the expansion of 0.
class PhiExpansion {
public:
    PhiExpansion() = default;
    // Sorts descending, then rejects duplicates and adjacent positions.
    explicit PhiExpansion(std::vector<int> support);

    const std::vector<int>& support() const { return support_; }
    bool empty() const { return support_.empty(); }
    std::size_t digit_sum() const { return support_.size(); }
    int leftmost() const { return support_.front(); }
    int rightmost() const { return support_.back(); }

    bool operator==(const PhiExpansion&) const = default;

private:
    std::vector<int> support_;  // strictly decreasing
};

// Sum of phi^i over the support; equals (N, 0) for the expansion of N.
exactnum::GoldenInt evaluate(const PhiExpansion& e);

// Reference algorithm: repeatedly take the largest i with phi^i <= remainder
// (decided by the exact sign of remainder - phi^i) until the remainder is 0.
PhiExpansion expand_greedy(Nat n);

// Independent second route: base table for the first four Lucas intervals,
// digitwise union on even intervals, digit-word surgery on odd ones.
// Agrees with expand_greedy on every input.
PhiExpansion expand_recursive(Nat n);

// Closed-form expansion of the m-th Lucas number, m >= 1:
// even m = 2n: {2n, -2n}; odd m = 2n+1: {2n, 2n-2, ..., 0, -2, ..., -2n}.
PhiExpansion lucas_expansion(int m);

// Number of 1-digits of the expansion of n, and its parity.
Nat sum_digits(Nat n);
int tsd(Nat n);

}  // namespace goldbase::phicodec
