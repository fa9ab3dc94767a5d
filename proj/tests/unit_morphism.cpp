#include <stdexcept>

#include "doctest.h"
#include "phikit/morphism.hpp"

using namespace phikit;

namespace {

Word split(const std::string& s) {
  Word w;
  std::string cur;
  for (char c : s) {
    if (c == ' ') {
      if (!cur.empty()) w.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) w.push_back(cur);
  return w;
}

}  // namespace

TEST_SUITE("morphism") {

TEST_CASE("rule parsing") {
  Morphism m = parse_morphism("a -> a b\nb -> a");
  CHECK(m.image("a") == split("a b"));
  CHECK(m.image("b") == split("a"));
  CHECK(m.alphabet() == std::vector<Symbol>{"a", "b"});

  Morphism semi = parse_morphism("3 -> 3 2; 2 -> 3  # comment");
  CHECK(semi.image("3") == split("3 2"));

  Morphism primed = parse_morphism("3' -> 1 3' 4; 1 -> 1; 4 -> 4");
  CHECK(primed.image("3'") == split("1 3' 4"));

  // Morphism rules use ->; => is the coding/decoration arrow.
  CHECK_THROWS_AS(parse_morphism("x => x y; y => x"), ParseError);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_morphism("a -> a b\na -> b"), ParseError);
  CHECK_THROWS_AS(parse_morphism("a ->"), ParseError);
  CHECK_THROWS_AS(parse_morphism("a b"), ParseError);
  CHECK_THROWS_AS(parse_morphism(""), ParseError);
  try {
    parse_morphism("a -> a b\na -> b");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("coding and decoration parsing") {
  Coding c = parse_coding("3' => 3; 1 => 1");
  CHECK(c.image("3'") == "3");
  CHECK(c.apply(split("1 3' 1")) == split("1 3 1"));

  Decoration d = parse_decoration("a => 1 2 4 4; b => 1 2 4");
  CHECK(d.image("b") == split("1 2 4"));
  CHECK(d.apply(split("b a")) == split("1 2 4 1 2 4 4"));
}

TEST_CASE("morphism validation") {
  CHECK_THROWS_AS(Morphism({{"a", split("a b")}}), std::invalid_argument);
  CHECK_THROWS_AS(Morphism({{"a", split("a")}, {"a", split("a")}}),
                  std::invalid_argument);
}

TEST_CASE("fixed points") {
  Morphism fib = fibonacci_morphism("a", "b");
  CHECK(fixed_point(fib, "a", 13) == split("a b a a b a b a a b a a b"));
  CHECK(fibonacci_word("a", "b", 13) == split("a b a a b a b a a b a a b"));
  CHECK(g_word("a", "b", 6) == split("b a b a a b"));

  Morphism g = g_morphism("a", "b");
  Word gw = fixed_point(g, "b", 200);
  Word fw = fibonacci_word("a", "b", 199);
  for (std::size_t i = 0; i < 199; ++i) CHECK(gw[i + 1] == fw[i]);

  CHECK(is_prolongable(fib, "a"));
  CHECK(!is_prolongable(fib, "b"));
  Morphism swap = parse_morphism("a -> b; b -> a");
  CHECK_THROWS_AS(fixed_point(swap, "a", 5), std::domain_error);
}

TEST_CASE("factor complexity of the Fibonacci word") {
  Word w = fibonacci_word("a", "b", 5000);
  CHECK(factor_complexity(w, 0) == 1);
  for (std::size_t n = 1; n <= 15; ++n)
    CHECK(factor_complexity(w, n) == n + 1);
  CHECK(factor_complexity(split("a b c a b"), 2) == 3);
  CHECK(factor_complexity(Word{}, 1) == 0);
}

TEST_CASE("occurrences overlap") {
  CHECK(occurrences(split("a b a b a"), split("a b a")) ==
        std::vector<std::size_t>{0, 2});
  CHECK(occurrences(split("a a a a"), split("a a")) ==
        std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("return words of the Fibonacci word") {
  Word w = fibonacci_word("a", "b", 500);
  ReturnWords rw = return_words(w, split("a"));
  CHECK(rw.words == std::vector<Word>{split("a b"), split("a")});
  CHECK(rw.sequence[0] == 0);
  CHECK(rw.sequence[1] == 1);
  CHECK(rw.sequence[2] == 0);
  CHECK_THROWS_AS(return_words(split("a b c"), split("c")), std::domain_error);
}

TEST_CASE("derived morphism on the Fibonacci word") {
  Morphism fib = fibonacci_morphism("a", "b");
  auto by_length = [](const Word& w) { return std::to_string(w.size()); };
  Morphism der = derived_morphism(fib, "a", split("a"), 500, by_length);
  CHECK(der.image("2") == split("2 1"));
  CHECK(der.image("1") == split("2"));
  CHECK(morphisms_isomorphic(der, "2", fibonacci_morphism("x", "y"), "x"));
}

TEST_CASE("morphism isomorphism") {
  CHECK(morphisms_isomorphic(fibonacci_morphism("a", "b"), "a",
                             fibonacci_morphism("3", "2"), "3"));
  CHECK(!morphisms_isomorphic(fibonacci_morphism("a", "b"), "a",
                              g_morphism("a", "b"), "b"));
}

TEST_CASE("decoration to morphic cover") {
  // Decorate the Fibonacci word by a => x y, b => z; the cover must rebuild
  // the same stream through a letter-to-letter coding.
  Morphism fib = fibonacci_morphism("a", "b");
  Decoration d = parse_decoration("a => x y; b => z");
  MorphicCover cover = decoration_to_morphic(fib, "a", d, 2000);
  Word direct = d.apply(fibonacci_word("a", "b", 1000));
  Word via = cover.coding.apply(
      fixed_point(cover.morphism, cover.seed, direct.size()));
  direct.resize(1500);
  via.resize(1500);
  CHECK(direct == via);
}

}  // TEST_SUITE
