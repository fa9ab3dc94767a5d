#pragma once

// Zeckendorf expansions, the digit sum s_Z, the Fibonacci interval
// scaffolding, and the constancy-point helpers built on it.

#include <cstdint>
#include <string>
#include <vector>

namespace phikit {

struct ZeckExpansion {
  // digits[i] is the coefficient of F_{i+2}, least significant first.
  std::vector<int> digits;
  friend bool operator==(const ZeckExpansion&, const ZeckExpansion&) = default;
};

// Greedy expansion; unique by the no-11 invariant.
ZeckExpansion zeck_expand(std::int64_t n);

// Validates digits (0/1, no two adjacent 1s) and sums F_{i+2} terms.
std::int64_t zeck_value(const ZeckExpansion& e);

int zeck_digit_sum(std::int64_t n);

// Most significant digit first; "0" for zero.
std::string to_string(const ZeckExpansion& e);

struct IntInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t length() const { return hi - lo + 1; }
  friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

// lambda(3) = {2}; lambda(n) = [F_n, F_{n+1}-1] for n >= 4.
IntInterval zeck_lambda(int n);
// psi(n) = [0, F_n - 1] for n >= 3; psi(n+1) = psi(n) union lambda(n).
IntInterval zeck_psi(int n);

// Constancy points of s_Z (N with s_Z(N+1) = s_Z(N)) inside [lo, hi].
std::vector<std::int64_t> constancy_points(std::int64_t lo, std::int64_t hi);

// Differences of the constancy points in [lo, hi], closed by the first
// constancy point beyond hi.
std::vector<std::int64_t> constancy_delta_word(std::int64_t lo,
                                               std::int64_t hi);

}  // namespace phikit
