#include "phikit/golden.hpp"

#include <array>
#include <stdexcept>

namespace phikit {

std::string to_string(Int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  UInt128 u = neg ? UInt128(0) - UInt128(v) : UInt128(v);
  std::string s;
  while (u > 0) {
    s.push_back(char('0' + int(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

Int128 checked_add(Int128 x, Int128 y) {
  Int128 r;
  if (__builtin_add_overflow(x, y, &r))
    throw std::overflow_error("golden: 128-bit add overflow");
  return r;
}

Int128 checked_sub(Int128 x, Int128 y) {
  Int128 r;
  if (__builtin_sub_overflow(x, y, &r))
    throw std::overflow_error("golden: 128-bit subtract overflow");
  return r;
}

Int128 checked_mul(Int128 x, Int128 y) {
  Int128 r;
  if (__builtin_mul_overflow(x, y, &r))
    throw std::overflow_error("golden: 128-bit multiply overflow");
  return r;
}

GoldenInt operator+(const GoldenInt& x, const GoldenInt& y) {
  return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

GoldenInt operator-(const GoldenInt& x, const GoldenInt& y) {
  return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}

GoldenInt operator-(const GoldenInt& x) {
  return {checked_sub(0, x.a), checked_sub(0, x.b)};
}

GoldenInt operator*(const GoldenInt& x, const GoldenInt& y) {
  Int128 aa = checked_mul(x.a, y.a);
  Int128 bb = checked_mul(x.b, y.b);
  Int128 cross = checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a));
  return {checked_add(aa, bb), checked_add(cross, bb)};
}

namespace {
int sgn128(Int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
}  // namespace

int sign(const GoldenInt& x) {
  // 2(a + b phi) = (2a + b) + b*sqrt(5)
  Int128 u = checked_add(checked_add(x.a, x.a), x.b);
  Int128 v = x.b;
  if (v == 0) return sgn128(u);
  if (u == 0) return sgn128(v);
  if ((u > 0) == (v > 0)) return sgn128(u);
  Int128 u2 = checked_mul(u, u);
  Int128 v5 = checked_mul(checked_mul(v, v), 5);
  if (u2 == v5)
    throw std::logic_error("golden: (2a+b)^2 == 5 b^2 with b != 0");
  return u2 > v5 ? sgn128(u) : sgn128(v);
}

std::string to_string(const GoldenInt& x) {
  return "(" + to_string(x.a) + "," + to_string(x.b) + ")";
}

namespace {

const std::array<std::int64_t, kMaxFibIndex + 1>& fib_table() {
  static const auto table = [] {
    std::array<std::int64_t, kMaxFibIndex + 1> t{};
    t[0] = 0;
    t[1] = 1;
    for (int i = 2; i <= kMaxFibIndex; ++i) t[i] = t[i - 1] + t[i - 2];
    return t;
  }();
  return table;
}

}  // namespace

std::int64_t fib(int k) {
  int m = k < 0 ? -k : k;
  if (m > kMaxFibIndex)
    throw std::overflow_error("fib: index " + std::to_string(k) +
                              " out of int64 range");
  std::int64_t f = fib_table()[m];
  if (k < 0 && m % 2 == 0) f = -f;
  return f;
}

std::int64_t lucas(int k) {
  if (k < 0) throw std::invalid_argument("lucas: negative index");
  if (k > kMaxLucasIndex)
    throw std::overflow_error("lucas: index " + std::to_string(k) +
                              " out of int64 range");
  if (k == 0) return 2;
  // L_k = F_{k-1} + F_{k+1}
  return fib_table()[k - 1] + fib_table()[k + 1];
}

GoldenInt phi_pow(int k) {
  if (k > kMaxPhiPowIndex || k < -kMaxPhiPowIndex)
    throw std::overflow_error("phi_pow: index out of range");
  return {fib(k - 1), fib(k)};
}

namespace {
int bit_length(UInt128 v) {
  int n = 0;
  std::uint64_t hi = std::uint64_t(v >> 64);
  std::uint64_t lo = std::uint64_t(v);
  if (hi) n = 128 - __builtin_clzll(hi);
  else if (lo) n = 64 - __builtin_clzll(lo);
  return n;
}
}  // namespace

UInt128 isqrt(UInt128 v) {
  if (v < 2) return v;
  // Seed above sqrt(v), then Newton steps decrease monotonically to the floor.
  UInt128 x = UInt128(1) << (bit_length(v) / 2 + 1);
  for (;;) {
    UInt128 y = (x + v / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  return x;
}

std::int64_t floor_mul_phi(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("floor_mul_phi: negative argument");
  if (n >= (std::int64_t(1) << 62))
    throw std::overflow_error("floor_mul_phi: argument >= 2^62");
  UInt128 nn = UInt128(n);
  UInt128 root = isqrt(5 * nn * nn);
  return std::int64_t((nn + root) / 2);
}

}  // namespace phikit
