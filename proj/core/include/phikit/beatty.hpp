#pragma once

// Generalized Beatty sequences V(n) = p*floor(n*phi) + q*n + r, their
// first-difference structure, Wythoff compositions, unions, and partition
// checking.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace phikit {

struct Gbs {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  int n0 = 1;  // first index; sequences come in 0- and 1-based forms
  friend bool operator==(const Gbs&, const Gbs&) = default;
};

// Both difference letters positive, so terms strictly increase.
bool gbs_increasing(const Gbs& v);

std::int64_t gbs_term(const Gbs& v, std::int64_t n);
std::vector<std::int64_t> gbs_terms(const Gbs& v, std::size_t count);

// The difference sequence is the Fibonacci word on {2p+q, p+q}.
std::pair<std::int64_t, std::int64_t> gbs_delta_alphabet(const Gbs& v);

// Converse: a sequence starting at first_term whose differences are the
// Fibonacci word x_{a,b} is the GBS (a-b, 2b-a, r) with n0 = 1.
Gbs gbs_from_delta(std::int64_t a, std::int64_t b, std::int64_t first_term);

// V composed with the lower Wythoff sequence A(n) = floor(n*phi) resp. the
// upper Wythoff sequence B(n) = floor(n*phi^2).
Gbs compose_A(const Gbs& v);
Gbs compose_B(const Gbs& v);

struct UnionResult {
  std::vector<std::int64_t> terms;           // sorted, distinct
  std::optional<std::int64_t> duplicate;     // first value hit twice
};

// All terms <= bound of the given sequences, merged lazily.
UnionResult merge_union(const std::vector<Gbs>& parts, std::int64_t bound);

struct PartitionResult {
  bool ok = false;
  std::optional<std::int64_t> first_violation;  // missed or doubly covered
};

// Do the sequences cover [lo, hi] exactly once?
PartitionResult is_partition(const std::vector<Gbs>& parts, std::int64_t lo,
                             std::int64_t hi);

}  // namespace phikit
