#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "phikit/beatty.hpp"
#include "phikit/golden.hpp"

using namespace phikit;

TEST_SUITE("beatty") {

TEST_CASE("terms of the lower Wythoff sequence") {
  Gbs a{1, 0, 0, 1};
  const std::int64_t want[] = {1, 3, 4, 6, 8, 9, 11};
  for (int n = 1; n <= 7; ++n) CHECK(gbs_term(a, n) == want[n - 1]);
  CHECK(gbs_terms(a, 7) == std::vector<std::int64_t>(want, want + 7));
}

TEST_CASE("index origin") {
  Gbs v{1, 1, 0, 0};
  CHECK(gbs_term(v, 0) == 0);
  CHECK_THROWS_AS(gbs_term(v, -1), std::invalid_argument);
  Gbs w{1, 1, 0, 1};
  CHECK_THROWS_AS(gbs_term(w, 0), std::invalid_argument);
}

TEST_CASE("overflow is reported") {
  Gbs v{1, 0, 0, 1};
  CHECK_THROWS_AS(gbs_term(v, std::int64_t(1) << 62), std::overflow_error);
  Gbs big{std::int64_t(1) << 40, 0, 0, 1};
  CHECK_THROWS_AS(gbs_term(big, std::int64_t(1) << 40), std::overflow_error);
}

TEST_CASE("increasing test") {
  CHECK(gbs_increasing({1, 0, 0, 1}));
  CHECK(gbs_increasing({0, 1, 5, 1}));
  CHECK(gbs_increasing({-1, 3, 0, 1}));   // letters 1 and 2
  CHECK(!gbs_increasing({1, -1, 0, 1}));  // letter p+q = 0
  CHECK(!gbs_increasing({-1, 2, 0, 1}));  // letter 2p+q = 0
}

TEST_CASE("difference alphabet") {
  CHECK(gbs_delta_alphabet({1, 2, 0, 1}) == std::pair<std::int64_t, std::int64_t>{4, 3});
  CHECK(gbs_delta_alphabet({4, 3, 1, 0}) == std::pair<std::int64_t, std::int64_t>{11, 7});
  // Every consecutive difference is one of the two letters.
  Gbs v{2, 1, -2, 1};
  auto [big, small] = gbs_delta_alphabet(v);
  std::vector<std::int64_t> t = gbs_terms(v, 500);
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    std::int64_t d = t[i + 1] - t[i];
    CHECK((d == big || d == small));
  }
}

TEST_CASE("recovering parameters from the difference word") {
  Gbs v = gbs_from_delta(11, 7, 1);
  CHECK(v == Gbs{4, 3, -6, 1});
  // Round trip: the recovered sequence reproduces its own differences.
  for (std::int64_t a = 3; a <= 8; ++a) {
    std::int64_t b = a - 2;
    Gbs w = gbs_from_delta(a, b, 10);
    CHECK(gbs_delta_alphabet(w) == std::pair<std::int64_t, std::int64_t>{a, b});
    CHECK(gbs_term(w, 1) == 10);
  }
}

TEST_CASE("composition with the Wythoff sequences") {
  CHECK(compose_A({1, 2, 0, 1}) == Gbs{3, 1, -1, 1});
  CHECK(compose_B({1, 2, 0, 1}) == Gbs{4, 3, 0, 1});
  const Gbs cases[] = {{1, 2, 0, 1}, {2, 1, -2, 1}, {1, 0, 0, 1}, {3, -1, 4, 1}};
  for (const Gbs& v : cases) {
    Gbs va = compose_A(v);
    Gbs vb = compose_B(v);
    for (std::int64_t n = 1; n <= 50; ++n) {
      std::int64_t an = floor_mul_phi(n);
      CHECK(gbs_term(v, an) == gbs_term(va, n));
      CHECK(gbs_term(v, an + n) == gbs_term(vb, n));
    }
  }
}

TEST_CASE("merged unions") {
  UnionResult u = merge_union({{2, 1, -2, 1}, {3, 2, -3, 1}}, 15);
  CHECK(u.terms == std::vector<std::int64_t>{1, 2, 6, 9, 10, 14, 15});
  CHECK(!u.duplicate.has_value());

  UnionResult w = merge_union({{1, 2, 0, 0}, {4, 3, 1, 0}}, 19);
  CHECK(w.terms == std::vector<std::int64_t>{0, 1, 3, 7, 8, 10, 14, 18, 19});
  CHECK(!w.duplicate.has_value());

  UnionResult dup = merge_union({{1, 0, 0, 1}, {1, 0, 0, 1}}, 10);
  CHECK(dup.duplicate.has_value());
  CHECK(*dup.duplicate == 1);

  CHECK_THROWS_AS(merge_union({{1, -1, 0, 1}}, 10), std::invalid_argument);
}

TEST_CASE("partition checking") {
  PartitionResult bad = is_partition({{1, 1, 0, 1}, {2, 1, 0, 1}}, 1, 10);
  CHECK(!bad.ok);
  CHECK(bad.first_violation.has_value());
  CHECK(*bad.first_violation == 1);

  PartitionResult good =
      is_partition({{1, 1, 0, 1}, {2, 1, 0, 1}, {1, 1, -1, 1}}, 1, 1000);
  CHECK(good.ok);
  CHECK(!good.first_violation.has_value());

  CHECK_THROWS_AS(is_partition({{1, 0, 0, 1}}, 5, 4), std::invalid_argument);
}

}  // TEST_SUITE
