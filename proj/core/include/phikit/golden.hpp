#pragma once

#include <cstdint>
#include <string>

namespace phikit {

using Int128 = __int128;
using UInt128 = unsigned __int128;

std::string to_string(Int128 v);

// Overflow-checked 128-bit arithmetic.  Throws std::overflow_error.
Int128 checked_add(Int128 x, Int128 y);
Int128 checked_sub(Int128 x, Int128 y);
Int128 checked_mul(Int128 x, Int128 y);

// Element a + b*phi of the ring Z[phi], phi = (1+sqrt(5))/2.
// Since 1 and phi are independent over Q the representation is unique
// and equality is componentwise.
struct GoldenInt {
  Int128 a = 0;  // rational part
  Int128 b = 0;  // coefficient of phi

  friend bool operator==(const GoldenInt&, const GoldenInt&) = default;
};

GoldenInt operator+(const GoldenInt& x, const GoldenInt& y);
GoldenInt operator-(const GoldenInt& x, const GoldenInt& y);
GoldenInt operator-(const GoldenInt& x);
// Uses phi^2 = phi + 1:
// (a1 + b1 phi)(a2 + b2 phi) = (a1 a2 + b1 b2) + (a1 b2 + a2 b1 + b1 b2) phi.
GoldenInt operator*(const GoldenInt& x, const GoldenInt& y);

// Sign of the real number a + b*phi: -1, 0 or +1.
// Decided from the signs of 2a+b and b; the mixed-sign case compares
// (2a+b)^2 against 5b^2, which cannot tie for b != 0.
int sign(const GoldenInt& x);

std::string to_string(const GoldenInt& x);

// Largest indices for which the int64 Fibonacci / Lucas values fit.
inline constexpr int kMaxFibIndex = 92;
inline constexpr int kMaxLucasIndex = 90;
inline constexpr int kMaxPhiPowIndex = 91;

// F_k with F_0 = 0, F_1 = 1, extended to k < 0 by F_{-n} = (-1)^{n+1} F_n.
std::int64_t fib(int k);

// L_k with L_0 = 2, L_1 = 1; k must be >= 0.
std::int64_t lucas(int k);

// phi^k = F_{k-1} + F_k * phi, for any |k| <= kMaxPhiPowIndex.
GoldenInt phi_pow(int k);

// floor(sqrt(v)), pure integer Newton iteration.
UInt128 isqrt(UInt128 v);

// floor(n*phi) = floor((n + isqrt(5 n^2)) / 2), exact for 0 <= n < 2^62.
std::int64_t floor_mul_phi(std::int64_t n);

}  // namespace phikit
