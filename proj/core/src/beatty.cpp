#include "phikit/beatty.hpp"

#include <queue>
#include <stdexcept>

#include "phikit/golden.hpp"

namespace phikit {

bool gbs_increasing(const Gbs& v) {
  return v.p + v.q >= 1 && 2 * v.p + v.q >= 1;
}

std::int64_t gbs_term(const Gbs& v, std::int64_t n) {
  if (n < v.n0) throw std::invalid_argument("gbs_term: index below n0");
  Int128 value = Int128(v.p) * floor_mul_phi(n) + Int128(v.q) * n + v.r;
  if (value > Int128(INT64_MAX) || value < Int128(INT64_MIN))
    throw std::overflow_error("gbs_term: value out of range");
  return std::int64_t(value);
}

std::vector<std::int64_t> gbs_terms(const Gbs& v, std::size_t count) {
  std::vector<std::int64_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(gbs_term(v, v.n0 + std::int64_t(i)));
  return out;
}

std::pair<std::int64_t, std::int64_t> gbs_delta_alphabet(const Gbs& v) {
  return {2 * v.p + v.q, v.p + v.q};
}

Gbs gbs_from_delta(std::int64_t a, std::int64_t b, std::int64_t first_term) {
  Gbs v;
  v.p = a - b;
  v.q = 2 * b - a;
  v.n0 = 1;
  v.r = first_term - v.p - v.q;  // V(1) = p + q + r
  return v;
}

Gbs compose_A(const Gbs& v) { return {v.p + v.q, v.p, v.r - v.p, v.n0}; }

Gbs compose_B(const Gbs& v) { return {2 * v.p + v.q, v.p + v.q, v.r, v.n0}; }

namespace {

struct Cursor {
  std::size_t part;
  std::int64_t n;
  std::int64_t value;
  bool operator>(const Cursor& o) const { return value > o.value; }
};

using MinHeap =
    std::priority_queue<Cursor, std::vector<Cursor>, std::greater<Cursor>>;

MinHeap make_heap_at_least(const std::vector<Gbs>& parts, std::int64_t lo) {
  MinHeap heap;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Gbs& v = parts[i];
    if (!gbs_increasing(v))
      throw std::invalid_argument("gbs union: sequence is not increasing");
    std::int64_t n = v.n0;
    std::int64_t value = gbs_term(v, n);
    while (value < lo) value = gbs_term(v, ++n);
    heap.push({i, n, value});
  }
  return heap;
}

void advance(MinHeap& heap, const std::vector<Gbs>& parts, Cursor top) {
  top.n += 1;
  top.value = gbs_term(parts[top.part], top.n);
  heap.push(top);
}

}  // namespace

UnionResult merge_union(const std::vector<Gbs>& parts, std::int64_t bound) {
  UnionResult out;
  if (parts.empty()) return out;
  MinHeap heap = make_heap_at_least(parts, INT64_MIN + 1);
  while (!heap.empty()) {
    Cursor top = heap.top();
    heap.pop();
    if (top.value > bound) break;  // all other cursors are at least this value
    if (!out.terms.empty() && out.terms.back() == top.value) {
      if (!out.duplicate) out.duplicate = top.value;
    } else {
      out.terms.push_back(top.value);
    }
    advance(heap, parts, top);
  }
  return out;
}

PartitionResult is_partition(const std::vector<Gbs>& parts, std::int64_t lo,
                             std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("is_partition: empty range");
  if (parts.empty()) return {false, lo};
  MinHeap heap = make_heap_at_least(parts, lo);
  std::int64_t expected = lo;
  while (!heap.empty() && expected <= hi) {
    Cursor top = heap.top();
    heap.pop();
    if (top.value > expected) return {false, expected};  // gap
    if (top.value < expected) return {false, top.value};  // duplicate
    ++expected;
    advance(heap, parts, top);
  }
  if (expected <= hi) return {false, expected};
  return {true, std::nullopt};
}

}  // namespace phikit
