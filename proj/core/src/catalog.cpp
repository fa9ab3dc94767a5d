#include "phikit/catalog.hpp"

namespace phikit {

namespace {

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  auto add = [&](std::string name, std::string description, const char* rules,
                 Symbol seed, const char* coding = nullptr) {
    entries.push_back({std::move(name), std::move(description),
                       parse_morphism(rules), std::move(seed),
                       coding ? std::optional<Coding>(parse_coding(coding))
                              : std::nullopt});
  };
  add("fib", "Fibonacci morphism", "a -> a b; b -> a", "a");
  add("g", "Fibonacci relative, fixed point b a b a a ...",
      "a -> b a a; b -> b a", "b");
  add("h", "square of fib up to renaming, drives the Zeckendorf constancy "
      "recursion", "1 -> 1 4; 3 -> 1 4; 4 -> 3", "1");
  add("sigma", "Lucas interval code morphism",
      "c0 -> c0 c1; c1 -> c2 c3; c2 -> c0 c1 c2; c3 -> c3 c2 c3", "c0");
  add("dIZ", "difference morphism, Zeckendorf increase points",
      "3 -> 3 2; 2 -> 3", "3");
  add("dCZ", "difference morphism, Zeckendorf constancy points",
      "1 -> 1 4; 3 -> 1 4; 4 -> 3", "1");
  add("dDZ", "difference morphism, Zeckendorf decrease points",
      "5 -> 5 3; 3 -> 5", "5");
  add("dIbeta", "difference morphism, base-phi increase points",
      "1 -> 1 2; 2 -> 4; 4 -> 1 2 4 4", "1");
  add("dCbeta", "difference morphism, base-phi constancy points",
      "1 -> 4 3; 2 -> 2 1; 3 -> 2 1; 3' -> 1 3' 4 3; 4 -> 1 3' 4", "2",
      "1 => 1; 2 => 2; 3 => 3; 3' => 3; 4 => 4");
  add("dDbeta", "difference morphism, base-phi decrease points",
      "2 -> 5 4 2; 4 -> 5 4 2; 5 -> 7; 7 -> 7 5 4 2", "7");
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& finite_catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_catalog(const std::string& name) {
  for (const auto& e : finite_catalog())
    if (e.name == name) return &e;
  return nullptr;
}

const GradedMorphism& tau_morphism() {
  static const GradedMorphism m({"0", "1"}, {
                                                {{0, 0}, {+1, 1}},
                                                {{0, 0}},
                                            });
  return m;
}

GradedSymbol tau_seed() { return {0, 0}; }

const GradedOutputMap& tau_output() {
  static const GradedOutputMap out({0, 0});
  return out;
}

const GradedMorphism& gamma_morphism() {
  static const GradedMorphism m({"c0", "c1", "c2", "c3"},
                                {
                                    {{0, 0}, {0, 1}},
                                    {{0, 2}, {0, 3}},
                                    {{+2, 0}, {+2, 1}, {+2, 2}},
                                    {{+1, 3}, {+2, 2}, {+1, 3}},
                                });
  return m;
}

GradedSymbol gamma_seed() { return {0, 0}; }

const GradedDecoration& gamma_decoration() {
  static const GradedDecoration d({{0, 1}, {2}, {2, 3}, {3, 3}});
  return d;
}

const Decoration& sigma_cover_decoration() {
  static const Decoration d = parse_decoration("a => c2 c3; b => c0 c1");
  return d;
}

const std::vector<DecorationInstance>& decoration_instances() {
  static const std::vector<DecorationInstance> instances = [] {
    std::vector<DecorationInstance> out;
    out.push_back({"increase", "b",
                   parse_decoration("a => 1 2 4 4; b => 1 2 4"), "dIbeta"});
    out.push_back({"constancy", "b",
                   parse_decoration("a => 3 1 3 4; b => 2 1 4"), ""});
    out.push_back({"decrease", "b", parse_decoration("a => 5 4 2; b => 7"),
                   "dDbeta"});
    return out;
  }();
  return instances;
}

}  // namespace phikit
