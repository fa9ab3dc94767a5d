#include <cstdint>
#include <vector>

#include "doctest.h"
#include "phikit/catalog.hpp"
#include "phikit/graded.hpp"
#include "phikit/morphism.hpp"

using namespace phikit;

namespace {

const std::vector<std::int64_t> kSz = {0, 1, 1, 1, 2, 1, 2, 2, 1, 2, 2, 2, 3,
                                       1, 2, 2, 2, 3, 2, 3, 3, 1, 2, 2, 2};

const std::vector<std::int64_t> kSbeta = {
    0, 1, 2, 2, 3, 3, 3, 2, 3, 4, 4, 5, 4, 4, 4, 5, 4,
    4, 2, 3, 4, 4, 5, 5, 5, 4, 5, 6, 6, 7, 5, 5, 5, 6};

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("named morphisms resolve") {
  const char* names[] = {"fib", "g",      "h",      "sigma",  "dIZ",
                         "dCZ", "dDZ",    "dIbeta", "dCbeta", "dDbeta"};
  for (const char* n : names) {
    const CatalogEntry* e = find_catalog(n);
    REQUIRE(e != nullptr);
    CHECK(e->name == n);
    CHECK(is_prolongable(e->morphism, e->seed));
    CHECK(!e->description.empty());
  }
  CHECK(find_catalog("nope") == nullptr);
  CHECK(finite_catalog().size() == 10);
}

TEST_CASE("difference morphism rules") {
  CHECK(find_catalog("dIZ")->morphism.image("3") == Word{"3", "2"});
  CHECK(find_catalog("dCZ")->morphism.image("4") == Word{"3"});
  CHECK(find_catalog("dDZ")->morphism.image("5") == Word{"5", "3"});
  CHECK(find_catalog("dIbeta")->morphism.image("4") ==
        Word{"1", "2", "4", "4"});
  CHECK(find_catalog("dCbeta")->morphism.image("3'") ==
        Word{"1", "3'", "4", "3"});
  CHECK(find_catalog("dCbeta")->coding->image("3'") == "3");
  CHECK(find_catalog("dDbeta")->morphism.image("7") ==
        Word{"7", "5", "4", "2"});
  CHECK(find_catalog("sigma")->morphism.image("c2") ==
        Word{"c0", "c1", "c2"});
}

TEST_CASE("graded machinery reproduces the digit sums") {
  auto sz = graded_output(tau_morphism(), tau_seed(), tau_output(), kSz.size());
  CHECK(sz == kSz);
  auto sb = graded_decorated_output(gamma_morphism(), gamma_seed(),
                                    gamma_decoration(), kSbeta.size());
  CHECK(sb == kSbeta);
}

TEST_CASE("graded tag word of the two letter machinery is the Fibonacci word") {
  auto tags = graded_tag_word(tau_morphism(), tau_seed(), 100);
  Word fw = fibonacci_word("0", "1", 100);
  for (std::size_t i = 0; i < fw.size(); ++i)
    CHECK(tau_morphism().tag_name(tags[i]) == fw[i]);
}

TEST_CASE("sigma cover decoration") {
  CHECK(sigma_cover_decoration().image("a") == Word{"c2", "c3"});
  CHECK(sigma_cover_decoration().image("b") == Word{"c0", "c1"});
}

TEST_CASE("decoration instances rebuild the difference morphisms") {
  const Morphism& g = find_catalog("g")->morphism;
  CHECK(decoration_instances().size() == 3);
  for (const auto& inst : decoration_instances()) {
    MorphicCover cover = decoration_to_morphic(g, inst.seed, inst.decoration,
                                               3000);
    Word direct = inst.decoration.apply(fixed_point(g, inst.seed, 2000));
    direct.resize(2000);
    Word via =
        cover.coding.apply(fixed_point(cover.morphism, cover.seed, 2000));
    CHECK(direct == via);
    if (inst.target.empty()) continue;
    const CatalogEntry* t = find_catalog(inst.target);
    REQUIRE(t != nullptr);
    CHECK(morphisms_isomorphic(cover.morphism, cover.seed, t->morphism,
                               t->seed));
  }
}

TEST_CASE("constancy instance matches the projected catalog stream") {
  const Morphism& g = find_catalog("g")->morphism;
  const DecorationInstance& inst = decoration_instances()[1];
  CHECK(inst.name == "constancy");
  Word stream = inst.decoration.apply(fixed_point(g, inst.seed, 2000));
  stream.resize(2000);
  const CatalogEntry* t = find_catalog("dCbeta");
  Word target = t->coding->apply(fixed_point(t->morphism, t->seed, 2000));
  CHECK(stream == target);
}

}  // TEST_SUITE
