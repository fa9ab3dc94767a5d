#pragma once

// Base-phi (Bergman) expansions: exact greedy expansion, the recursive
// construction over Lucas intervals, the sigma-coding of those intervals,
// and the digit-block type classifier.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "phikit/golden.hpp"
#include "phikit/morphism.hpp"
#include "phikit/zeckendorf.hpp"

namespace phikit {

struct PhiExpansion {
  int hi = 0;  // highest stored index
  int lo = 0;  // lowest stored index (<= 0)
  std::vector<int> digits;  // digits[i] is the digit at index lo + i
  int digit(int k) const {
    if (k < lo || k > hi) return 0;
    return digits[std::size_t(k - lo)];
  }
  friend bool operator==(const PhiExpansion&, const PhiExpansion&) = default;
};

// Greedy expansion: repeatedly subtract the largest power of phi not
// exceeding the exact remainder.
PhiExpansion beta_expand(std::int64_t n);

// Validates digits (0/1, no two adjacent 1s) and sums the phi powers.
GoldenInt beta_value(const PhiExpansion& e);

int beta_digit_sum(std::int64_t n);

// Most significant first with '.' after index 0, e.g. "10000.0001"; zero is
// "0." and one is "1.".
std::string to_string(const PhiExpansion& e);

PhiExpansion phi_expansion_from_string(std::string_view s);

// Expansion via the recursive interval structure: base table for N <= 7,
// frame-plus-overlay on even Lucas intervals, prefix/suffix surgery on odd
// ones.  Must agree with beta_expand everywhere.
PhiExpansion beta_expand_rst(std::int64_t n);

// Same recursion but with a caller-supplied base table (exactly 8 entries,
// rendered like to_string output).  Exists so tests can corrupt the base case.
PhiExpansion beta_expand_rst_with_base(std::int64_t n,
                                       const std::vector<std::string>& base);

struct LucasInterval {
  int m = 0;
  IntInterval range;
  friend bool operator==(const LucasInterval&, const LucasInterval&) = default;
};

// lambda(0) = [0,1]; lambda(2n) = [L_2n, L_2n+1]; lambda(2n+1) =
// [L_2n+1 + 1, L_2n+2 - 1].
IntInterval lucas_interval(int m);
LucasInterval lucas_partition(std::int64_t n);

enum class IjkPart { I, J, K };

struct IjkInterval {
  int n = 0;
  IjkPart part = IjkPart::I;
  IntInterval range;
};

// Splits an odd Lucas interval lambda(2n+1), n >= 2, into the three
// sub-intervals of the recursive construction.
IjkInterval ijk_partition(std::int64_t N);

// The coding word of lambda(m) over {c0, c1, c2, c3}.
Word psi_code(int m);

enum class SuffixType { B, E, Neither };

// B when d_1 d_0 d_-1 = 000; E when d_2 d_1 d_0 = 001.
SuffixType suffix_type(std::int64_t n);

}  // namespace phikit
