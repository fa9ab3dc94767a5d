#include "phikit/zeckendorf.hpp"

#include <stdexcept>

#include "phikit/golden.hpp"

namespace phikit {

ZeckExpansion zeck_expand(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("zeck_expand: negative argument");
  ZeckExpansion e;
  if (n == 0) return e;
  int k = 2;
  while (k < kMaxFibIndex && fib(k + 1) <= n) ++k;
  e.digits.assign(std::size_t(k - 1), 0);
  std::int64_t r = n;
  while (r > 0) {
    while (fib(k) > r) --k;
    e.digits[std::size_t(k - 2)] = 1;
    r -= fib(k);
    --k;  // with the extra decrement below, skips the forbidden neighbor
  }
  return e;
}

std::int64_t zeck_value(const ZeckExpansion& e) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < e.digits.size(); ++i) {
    int d = e.digits[i];
    if (d != 0 && d != 1)
      throw std::invalid_argument("zeck_value: digit outside {0,1}");
    if (d == 1 && i + 1 < e.digits.size() && e.digits[i + 1] == 1)
      throw std::invalid_argument("zeck_value: adjacent 1s");
    if (d == 1) {
      if (i + 2 > std::size_t(kMaxFibIndex))
        throw std::overflow_error("zeck_value: digit index out of range");
      sum += fib(int(i) + 2);
    }
  }
  return sum;
}

int zeck_digit_sum(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("zeck_digit_sum: negative argument");
  if (n == 0) return 0;
  int count = 0;
  int k = 2;
  while (k < kMaxFibIndex && fib(k + 1) <= n) ++k;
  std::int64_t r = n;
  while (r > 0) {
    while (fib(k) > r) --k;  // stops at k >= 2 whenever r >= 1
    ++count;
    r -= fib(k);
    k -= 2;  // no-11: the next set digit is at least two indices down
  }
  return count;
}

std::string to_string(const ZeckExpansion& e) {
  if (e.digits.empty()) return "0";
  std::string out;
  out.reserve(e.digits.size());
  for (std::size_t i = e.digits.size(); i-- > 0;)
    out.push_back(char('0' + e.digits[i]));
  return out;
}

IntInterval zeck_lambda(int n) {
  if (n < 3) throw std::invalid_argument("zeck_lambda: index below 3");
  if (n == 3) return {2, 2};
  if (n + 1 > kMaxFibIndex)
    throw std::overflow_error("zeck_lambda: index out of range");
  return {fib(n), fib(n + 1) - 1};
}

IntInterval zeck_psi(int n) {
  if (n < 3) throw std::invalid_argument("zeck_psi: index below 3");
  if (n > kMaxFibIndex)
    throw std::overflow_error("zeck_psi: index out of range");
  return {0, fib(n) - 1};
}

std::vector<std::int64_t> constancy_points(std::int64_t lo, std::int64_t hi) {
  if (lo < 0 || hi < lo)
    throw std::invalid_argument("constancy_points: bad interval");
  std::vector<std::int64_t> out;
  int prev = zeck_digit_sum(lo);
  for (std::int64_t n = lo; n <= hi; ++n) {
    int next = zeck_digit_sum(n + 1);
    if (next == prev) out.push_back(n);
    prev = next;
  }
  return out;
}

std::vector<std::int64_t> constancy_delta_word(std::int64_t lo,
                                               std::int64_t hi) {
  std::vector<std::int64_t> pts = constancy_points(lo, hi);
  if (pts.empty())
    throw std::invalid_argument("constancy_delta_word: interval too small");
  // Close with the first constancy point past the interval.
  std::int64_t n = hi + 1;
  int prev = zeck_digit_sum(n);
  for (;; ++n) {
    int next = zeck_digit_sum(n + 1);
    if (next == prev) break;
    prev = next;
  }
  pts.push_back(n);
  std::vector<std::int64_t> word;
  word.reserve(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    word.push_back(pts[i + 1] - pts[i]);
  return word;
}

}  // namespace phikit
