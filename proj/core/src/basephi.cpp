#include "phikit/basephi.hpp"

#include <algorithm>
#include <stdexcept>

namespace phikit {

namespace {

// Largest k with phi^k <= (n, 0); n >= 1.
int top_power_index(std::int64_t n) {
  // log_phi(n) = log2(n) / log2(phi), log2(phi) ~ 0.694.
  int bits = 0;
  for (std::int64_t v = n; v > 0; v >>= 1) ++bits;
  int k = std::min(kMaxPhiPowIndex, bits * 3 / 2 + 2);
  GoldenInt target{n, 0};
  while (k > 0 && sign(target - phi_pow(k)) < 0) --k;
  return k;
}

}  // namespace

PhiExpansion beta_expand(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("beta_expand: negative argument");
  if (n == 0) return {0, 0, {0}};
  int top = top_power_index(n);
  PhiExpansion e;
  e.hi = top;
  GoldenInt r{n, 0};
  int k = top;
  int bottom = 0;
  std::vector<std::pair<int, int>> set_bits;
  while (!(r == GoldenInt{0, 0})) {
    if (k < -kMaxPhiPowIndex)
      throw std::overflow_error("beta_expand: exponent out of range");
    if (sign(r - phi_pow(k)) >= 0) {
      set_bits.push_back({k, 1});
      r = r - phi_pow(k);
      bottom = std::min(bottom, k);
      k -= 2;  // remainder is below phi^(k-1), skip the neighbor
    } else {
      --k;
    }
  }
  e.lo = bottom;
  e.digits.assign(std::size_t(e.hi - e.lo + 1), 0);
  for (auto [pos, bit] : set_bits) e.digits[std::size_t(pos - e.lo)] = bit;
  return e;
}

GoldenInt beta_value(const PhiExpansion& e) {
  if (e.digits.size() != std::size_t(e.hi - e.lo + 1))
    throw std::invalid_argument("beta_value: digit array size mismatch");
  GoldenInt sum{0, 0};
  for (int k = e.lo; k <= e.hi; ++k) {
    int d = e.digit(k);
    if (d != 0 && d != 1)
      throw std::invalid_argument("beta_value: digit outside {0,1}");
    if (d == 1 && k < e.hi && e.digit(k + 1) == 1)
      throw std::invalid_argument("beta_value: adjacent 1s");
    if (d == 1) {
      if (k < -kMaxPhiPowIndex || k > kMaxPhiPowIndex)
        throw std::overflow_error("beta_value: exponent out of range");
      sum = sum + phi_pow(k);
    }
  }
  return sum;
}

int beta_digit_sum(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("beta_digit_sum: negative argument");
  if (n == 0) return 0;
  GoldenInt r{n, 0};
  int k = top_power_index(n);
  int count = 0;
  while (!(r == GoldenInt{0, 0})) {
    if (k < -kMaxPhiPowIndex)
      throw std::overflow_error("beta_digit_sum: exponent out of range");
    if (sign(r - phi_pow(k)) >= 0) {
      ++count;
      r = r - phi_pow(k);
      k -= 2;
    } else {
      --k;
    }
  }
  return count;
}

std::string to_string(const PhiExpansion& e) {
  std::string out;
  int top = std::max(e.hi, 0);
  for (int k = top; k >= 0; --k) out.push_back(char('0' + e.digit(k)));
  out.push_back('.');
  for (int k = -1; k >= e.lo; --k) out.push_back(char('0' + e.digit(k)));
  return out;
}

PhiExpansion phi_expansion_from_string(std::string_view s) {
  auto dot = s.find('.');
  if (dot == std::string_view::npos)
    throw std::invalid_argument("phi expansion string needs a '.'");
  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part = s.substr(dot + 1);
  if (int_part.empty())
    throw std::invalid_argument("phi expansion string needs integer digits");
  PhiExpansion e;
  e.hi = int(int_part.size()) - 1;
  e.lo = -int(frac_part.size());
  e.digits.assign(std::size_t(e.hi - e.lo + 1), 0);
  auto put = [&](int k, char c) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("phi expansion string has a non-binary digit");
    e.digits[std::size_t(k - e.lo)] = c - '0';
  };
  for (std::size_t i = 0; i < int_part.size(); ++i)
    put(e.hi - int(i), int_part[i]);
  for (std::size_t i = 0; i < frac_part.size(); ++i)
    put(-1 - int(i), frac_part[i]);
  // Trim to canonical bounds: highest and lowest set digits (zero stays 0.).
  int top = e.hi, bottom = e.lo;
  while (top > 0 && e.digit(top) == 0) --top;
  while (bottom < 0 && e.digit(bottom) == 0) ++bottom;
  if (top == e.hi && bottom == e.lo) return e;
  PhiExpansion trimmed;
  trimmed.hi = top;
  trimmed.lo = std::min(bottom, 0);
  trimmed.digits.assign(std::size_t(trimmed.hi - trimmed.lo + 1), 0);
  for (int k = trimmed.lo; k <= trimmed.hi; ++k)
    trimmed.digits[std::size_t(k - trimmed.lo)] = e.digit(k);
  return trimmed;
}

namespace {

const char* kRstBase[8] = {"0.",        "1.",         "10.01",
                           "100.01",    "101.01",     "1000.1001",
                           "1010.0001", "10000.0001"};

// Mutable digit window for the surgery steps.
struct DigitWindow {
  int lo, hi;
  std::vector<int> bits;
  explicit DigitWindow(const PhiExpansion& e, int margin_hi, int margin_lo)
      : lo(e.lo - margin_lo), hi(e.hi + margin_hi) {
    bits.assign(std::size_t(hi - lo + 1), 0);
    for (int k = e.lo; k <= e.hi; ++k) bits[std::size_t(k - lo)] = e.digit(k);
  }
  int get(int k) const {
    if (k < lo || k > hi) return 0;
    return bits[std::size_t(k - lo)];
  }
  void set(int k, int v) {
    if (k < lo || k > hi) throw std::logic_error("digit window overflow");
    bits[std::size_t(k - lo)] = v;
  }
  void require(int k, int v, const char* what) const {
    if (get(k) != v)
      throw std::logic_error(std::string("surgery precondition failed: ") +
                             what);
  }
  PhiExpansion take() const {
    int top = hi, bottom = lo;
    while (top > 0 && get(top) == 0) --top;
    while (bottom < 0 && get(bottom) == 0) ++bottom;
    PhiExpansion e;
    e.hi = std::max(top, 0);
    e.lo = std::min(bottom, 0);
    e.digits.assign(std::size_t(e.hi - e.lo + 1), 0);
    for (int k = e.lo; k <= e.hi; ++k)
      e.digits[std::size_t(k - e.lo)] = get(k);
    return e;
  }
};

PhiExpansion rst_impl(std::int64_t N, const char* const base[8]);

// Part I: beta(L_2n + k) laid into the frame 1 0..0 . 0..0 1.
PhiExpansion rst_even(std::int64_t N, int n, const char* const base[8]) {
  std::int64_t k = N - lucas(2 * n);
  PhiExpansion frame;
  frame.hi = 2 * n;
  frame.lo = -2 * n;
  frame.digits.assign(std::size_t(4 * n + 1), 0);
  frame.digits.front() = 1;
  frame.digits.back() = 1;
  if (k == 0) return frame;
  PhiExpansion inner = rst_impl(k, base);
  if (inner.hi > 2 * n - 2 || inner.lo < -(2 * n - 2))
    throw std::logic_error("rst: overlay does not fit inside the frame");
  for (int j = inner.lo; j <= inner.hi; ++j)
    if (inner.digit(j))
      frame.digits[std::size_t(j - frame.lo)] = 1;
  return frame;
}

// Part II: prefix surgery (strip "10", prepend) and suffix surgery
// (strip "01", append) on the expansion of a smaller interval.
PhiExpansion rst_odd(std::int64_t N, int n, const char* const base[8]) {
  std::int64_t L2n1 = lucas(2 * n + 1);
  std::int64_t k = N - L2n1;
  std::int64_t inner_arg;
  enum { kI, kJ, kK } part;
  if (k <= lucas(2 * n - 2) - 1) {
    part = kI;
    inner_arg = lucas(2 * n - 1) + k;
  } else if (k <= lucas(2 * n - 2) + lucas(2 * n - 3)) {
    part = kJ;
    inner_arg = lucas(2 * n - 2) + (k - lucas(2 * n - 2));
  } else {
    part = kK;
    inner_arg = lucas(2 * n - 1) + (k - lucas(2 * n - 1));
  }
  PhiExpansion inner = rst_impl(inner_arg, base);
  int H = inner.hi, R = inner.lo;
  DigitWindow w(inner, 3, 4);
  w.require(H, 1, "leading digits are not '10'");
  w.require(H - 1, 0, "leading digits are not '10'");
  w.require(R, 1, "trailing digits are not '01'");
  w.require(R + 1, 0, "trailing digits are not '01'");
  switch (part) {
    case kI:  // 1000 ... 1001
      w.set(H, 0);
      w.set(H + 2, 1);
      w.set(R, 0);
      w.set(R + 1, 1);
      w.set(R - 2, 1);
      break;
    case kK:  // 1010 ... 0001
      w.set(H + 2, 1);
      w.set(R, 0);
      w.set(R - 2, 1);
      break;
    case kJ:  // 10010 ... 001001
      w.set(H + 3, 1);
      w.set(R, 0);
      w.set(R - 1, 1);
      w.set(R - 4, 1);
      break;
  }
  return w.take();
}

PhiExpansion rst_impl(std::int64_t N, const char* const base[8]) {
  if (N <= 7) return phi_expansion_from_string(base[N]);
  LucasInterval li = lucas_partition(N);
  if (li.m % 2 == 0) return rst_even(N, li.m / 2, base);
  return rst_odd(N, (li.m - 1) / 2, base);
}

}  // namespace

PhiExpansion beta_expand_rst(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("beta_expand_rst: negative argument");
  return rst_impl(n, kRstBase);
}

PhiExpansion beta_expand_rst_with_base(std::int64_t n,
                                       const std::vector<std::string>& base) {
  if (n < 0) throw std::invalid_argument("beta_expand_rst: negative argument");
  if (base.size() != 8)
    throw std::invalid_argument("beta_expand_rst: base table needs 8 entries");
  const char* table[8];
  for (int i = 0; i < 8; ++i) table[i] = base[i].c_str();
  return rst_impl(n, table);
}

IntInterval lucas_interval(int m) {
  if (m < 0) throw std::invalid_argument("lucas_interval: negative index");
  if (m == 0) return {0, 1};
  if (m + 1 > kMaxLucasIndex)
    throw std::overflow_error("lucas_interval: index out of range");
  if (m % 2 == 0) return {lucas(m), lucas(m + 1)};
  return {lucas(m) + 1, lucas(m + 1) - 1};
}

LucasInterval lucas_partition(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("lucas_partition: negative argument");
  for (int m = 0; m + 1 <= kMaxLucasIndex; ++m) {
    IntInterval r = lucas_interval(m);
    if (n >= r.lo && n <= r.hi) return {m, r};
  }
  throw std::overflow_error("lucas_partition: argument out of range");
}

IjkInterval ijk_partition(std::int64_t N) {
  LucasInterval li = lucas_partition(N);
  if (li.m % 2 == 0 || li.m < 5)
    throw std::invalid_argument(
        "ijk_partition: argument not in an odd Lucas interval of index >= 5");
  int n = (li.m - 1) / 2;
  std::int64_t L2n1 = lucas(2 * n + 1);
  IntInterval i_range{L2n1 + 1, L2n1 + lucas(2 * n - 2) - 1};
  IntInterval j_range{L2n1 + lucas(2 * n - 2), L2n1 + lucas(2 * n - 1)};
  IntInterval k_range{L2n1 + lucas(2 * n - 1) + 1, lucas(2 * n + 2) - 1};
  if (N <= i_range.hi) return {n, IjkPart::I, i_range};
  if (N <= j_range.hi) return {n, IjkPart::J, j_range};
  return {n, IjkPart::K, k_range};
}

Word psi_code(int m) {
  if (m < 0) throw std::invalid_argument("psi_code: negative index");
  std::vector<Word> codes;
  codes.push_back({"c0"});
  codes.push_back({"c1"});
  codes.push_back({"c2"});
  codes.push_back({"c3"});
  for (int j = 4; j <= m; ++j) {
    Word w;
    if (j % 2 == 0) {
      for (int i = 0; i <= j - 2; ++i)
        w.insert(w.end(), codes[std::size_t(i)].begin(),
                 codes[std::size_t(i)].end());
    } else {
      const Word& x = codes[std::size_t(j - 2)];
      const Word& y = codes[std::size_t(j - 3)];
      w.insert(w.end(), x.begin(), x.end());
      w.insert(w.end(), y.begin(), y.end());
      w.insert(w.end(), x.begin(), x.end());
    }
    codes.push_back(std::move(w));
  }
  return codes[std::size_t(m)];
}

SuffixType suffix_type(std::int64_t n) {
  PhiExpansion e = beta_expand(n);
  if (e.digit(1) == 0 && e.digit(0) == 0 && e.digit(-1) == 0)
    return SuffixType::B;
  if (e.digit(2) == 0 && e.digit(1) == 0 && e.digit(0) == 1)
    return SuffixType::E;
  return SuffixType::Neither;
}

}  // namespace phikit
