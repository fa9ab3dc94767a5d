#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "phikit/golden.hpp"
#include "phikit/zeckendorf.hpp"

using namespace phikit;

TEST_SUITE("zeckendorf") {

TEST_CASE("expansions of small numbers") {
  CHECK(to_string(zeck_expand(0)) == "0");
  CHECK(to_string(zeck_expand(1)) == "1");
  CHECK(to_string(zeck_expand(2)) == "10");
  CHECK(to_string(zeck_expand(3)) == "100");
  CHECK(to_string(zeck_expand(4)) == "101");
  CHECK(to_string(zeck_expand(12)) == "10101");
  CHECK(to_string(zeck_expand(100)) == "1000010100");
}

TEST_CASE("no adjacent ones and value round trip") {
  for (std::int64_t n = 0; n <= 20000; ++n) {
    ZeckExpansion e = zeck_expand(n);
    for (std::size_t i = 0; i + 1 < e.digits.size(); ++i)
      CHECK(!(e.digits[i] == 1 && e.digits[i + 1] == 1));
    if (!e.digits.empty()) CHECK(e.digits.back() == 1);
    CHECK(zeck_value(e) == n);
  }
  CHECK(zeck_value(zeck_expand(7540113804746346428LL)) ==
        7540113804746346428LL);
}

TEST_CASE("value validation") {
  CHECK_THROWS_AS(zeck_value({{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(zeck_value({{2}}), std::invalid_argument);
  CHECK_THROWS_AS(zeck_expand(-1), std::invalid_argument);
}

TEST_CASE("digit sums match the expansion") {
  const std::vector<int> expected = {0, 1, 1, 1, 2, 1, 2, 2, 1, 2, 2, 2, 3,
                                     1, 2, 2, 2, 3, 2, 3, 3, 1, 2, 2, 2};
  for (std::size_t n = 0; n < expected.size(); ++n)
    CHECK(zeck_digit_sum(std::int64_t(n)) == expected[n]);
  for (std::int64_t n = 0; n <= 5000; ++n) {
    int s = 0;
    for (int d : zeck_expand(n).digits) s += d;
    CHECK(zeck_digit_sum(n) == s);
  }
}

TEST_CASE("interval scaffolding") {
  CHECK(zeck_lambda(3) == IntInterval{2, 2});
  CHECK(zeck_lambda(5) == IntInterval{5, 7});
  CHECK(zeck_lambda(6) == IntInterval{8, 12});
  CHECK(zeck_psi(3) == IntInterval{0, 1});
  CHECK(zeck_psi(5) == IntInterval{0, 4});
  CHECK_THROWS_AS(zeck_lambda(2), std::invalid_argument);
  for (int n = 4; n <= 30; ++n) {
    CHECK(zeck_psi(n).hi + 1 == zeck_lambda(n).lo);
    CHECK(zeck_psi(n + 1).hi == zeck_lambda(n).hi);
    CHECK(zeck_lambda(n).length() == fib(n - 1));
  }
}

TEST_CASE("constancy points and difference words") {
  CHECK(constancy_points(0, 12) ==
        std::vector<std::int64_t>{1, 2, 6, 9, 10});
  CHECK(constancy_delta_word(0, 4) == std::vector<std::int64_t>{1, 4});
  CHECK(constancy_delta_word(5, 7) == std::vector<std::int64_t>{3});
  CHECK(constancy_delta_word(0, 7) == std::vector<std::int64_t>{1, 4, 3});
  CHECK_THROWS_AS(constancy_delta_word(3, 5), std::invalid_argument);
}

}  // TEST_SUITE
