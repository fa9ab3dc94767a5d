#include "phikit/spectrum.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "phikit/basephi.hpp"
#include "phikit/beatty.hpp"
#include "phikit/catalog.hpp"
#include "phikit/golden.hpp"
#include "phikit/graded.hpp"
#include "phikit/morphism.hpp"
#include "phikit/zeckendorf.hpp"

namespace phikit {

Classified classify(const std::vector<std::int64_t>& f) {
  if (f.size() < 2)
    throw std::invalid_argument("classify: need at least two values");
  Classified c;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    auto n = std::int64_t(i);
    if (f[i + 1] > f[i])
      c.increase.push_back(n);
    else if (f[i + 1] == f[i])
      c.constancy.push_back(n);
    else
      c.decrease.push_back(n);
  }
  return c;
}

namespace {

// Digit-sum prefixes are shared by most checks; grow one cache per numeration.
std::vector<std::int64_t> sz_prefix(std::int64_t len) {
  static std::vector<std::int64_t> cache;
  while (std::int64_t(cache.size()) < len)
    cache.push_back(zeck_digit_sum(std::int64_t(cache.size())));
  return {cache.begin(), cache.begin() + len};
}

std::vector<std::int64_t> sbeta_prefix(std::int64_t len) {
  static std::vector<std::int64_t> cache;
  while (std::int64_t(cache.size()) < len)
    cache.push_back(beta_digit_sum(std::int64_t(cache.size())));
  return {cache.begin(), cache.begin() + len};
}

std::vector<std::int64_t> diffs(const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> d;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) d.push_back(v[i + 1] - v[i]);
  return d;
}

std::vector<std::int64_t> word_values(const Word& w) {
  std::vector<std::int64_t> out;
  out.reserve(w.size());
  for (const auto& s : w) out.push_back(std::stoll(s));
  return out;
}

std::optional<FirstFailure> compare_values(
    const std::vector<std::int64_t>& actual,
    const std::vector<std::int64_t>& expected) {
  std::size_t n = std::min(actual.size(), expected.size());
  for (std::size_t i = 0; i < n; ++i)
    if (actual[i] != expected[i])
      return FirstFailure{std::int64_t(i), std::to_string(expected[i]),
                          std::to_string(actual[i])};
  if (actual.size() != expected.size())
    return FirstFailure{
        std::int64_t(n),
        n < expected.size() ? std::to_string(expected[n]) : "absent",
        n < actual.size() ? std::to_string(actual[n]) : "absent"};
  return std::nullopt;
}

std::optional<FirstFailure> compare_words(const Word& actual,
                                          const Word& expected) {
  std::size_t n = std::min(actual.size(), expected.size());
  for (std::size_t i = 0; i < n; ++i)
    if (actual[i] != expected[i])
      return FirstFailure{std::int64_t(i), expected[i], actual[i]};
  if (actual.size() != expected.size())
    return FirstFailure{std::int64_t(n),
                        n < expected.size() ? expected[n] : "absent",
                        n < actual.size() ? actual[n] : "absent"};
  return std::nullopt;
}

FirstFailure tag(FirstFailure f, const std::string& where) {
  f.expected = where + ": " + f.expected;
  f.actual = where + ": " + f.actual;
  return f;
}

std::string rules_to_string(const Morphism& m) {
  std::string out;
  for (const auto& [letter, image] : m.rules()) {
    if (!out.empty()) out += "; ";
    out += letter + " -> " + to_string(image);
  }
  return out;
}

std::string words_to_string(const std::vector<Word>& ws) {
  std::string out;
  for (const auto& w : ws) {
    if (!out.empty()) out += " | ";
    out += to_string(w);
  }
  return out;
}

// Sign classes recomputed from expansions, with at least `need` points in
// every class.
Classified classified_min_points(bool phi_side, std::size_t need) {
  std::int64_t len = 5 * std::int64_t(need) + 64;
  for (;;) {
    auto c = classify(phi_side ? sbeta_prefix(len) : sz_prefix(len));
    if (c.increase.size() >= need && c.constancy.size() >= need &&
        c.decrease.size() >= need)
      return c;
    len *= 2;
  }
}

// Concatenation of the interval code words, truncated to len.
Word code_stream(std::size_t len) {
  Word out;
  for (int m = 0; out.size() < len; ++m) {
    Word code = psi_code(m);
    out.insert(out.end(), code.begin(), code.end());
  }
  out.resize(len);
  return out;
}

std::optional<FirstFailure> check_zeck_tau(std::int64_t& bound, bool perturbed,
                                          std::string& note) {
  note = "graded fixed point output vs digit sums of greedy expansions";
  auto brute = sz_prefix(bound);
  auto formula =
      graded_output(tau_morphism(), tau_seed(), tau_output(), std::size_t(bound));
  if (perturbed)
    for (auto& v : formula) ++v;
  return compare_values(formula, brute);
}

std::optional<FirstFailure> check_zeck_gbs(std::int64_t& bound, bool perturbed,
                                          std::string& note) {
  note =
      "classes vs V(1,1,-2); V(2,1,-2) u V(3,2,-3); V(2,1,-4) with term 1 "
      "pinned to -1; all from n = 1";
  auto c = classify(sz_prefix(bound + 2));
  Gbs inc{1, 1, -2, 1};
  if (perturbed) ++inc.r;
  auto iu = merge_union({inc}, bound);
  if (auto f = compare_values(iu.terms, c.increase))
    return tag(*f, "increase");
  auto cu = merge_union({{2, 1, -2, 1}, {3, 2, -3, 1}}, bound);
  if (cu.duplicate)
    return FirstFailure{*cu.duplicate, "constancy parts disjoint",
                        "value produced twice"};
  if (auto f = compare_values(cu.terms, c.constancy))
    return tag(*f, "constancy");
  auto du = merge_union({{2, 1, -4, 1}}, bound);
  std::vector<std::int64_t> dec_expected{-1};
  dec_expected.insert(dec_expected.end(), c.decrease.begin(), c.decrease.end());
  if (auto f = compare_values(du.terms, dec_expected))
    return tag(*f, "decrease");
  return std::nullopt;
}

std::optional<FirstFailure> check_zeck_morph(std::int64_t& bound,
                                            bool perturbed,
                                            std::string& note) {
  note = "class difference words vs fixed points of dIZ, dCZ, dDZ";
  auto c = classified_min_points(false, std::size_t(bound) + 1);
  auto check_one = [&](const char* name, std::vector<std::int64_t> points,
                       const char* morphism_name)
      -> std::optional<FirstFailure> {
    auto expected = diffs(points);
    expected.resize(std::size_t(bound));
    const CatalogEntry* e = find_catalog(morphism_name);
    auto formula =
        word_values(fixed_point(e->morphism, e->seed, std::size_t(bound)));
    if (perturbed)
      for (auto& v : formula) ++v;
    if (auto f = compare_values(formula, expected)) return tag(*f, name);
    return std::nullopt;
  };
  if (auto f = check_one("increase", c.increase, "dIZ")) return f;
  if (auto f = check_one("constancy", c.constancy, "dCZ")) return f;
  std::vector<std::int64_t> dec{-1};
  dec.insert(dec.end(), c.decrease.begin(), c.decrease.end());
  if (auto f = check_one("decrease", dec, "dDZ")) return f;
  return std::nullopt;
}

std::optional<FirstFailure> check_zeck_recursion(std::int64_t& bound,
                                                bool perturbed,
                                                std::string& note) {
  bound = std::clamp<std::int64_t>(bound, 5, 30);
  note =
      "constancy points shift across consecutive intervals; difference words "
      "are h-iterates of 3";
  const Morphism& h = find_catalog("h")->morphism;
  Word lam_word = {"3"};
  for (std::int64_t n = 5; n <= bound; ++n) {
    Word psi_word = phikit::apply(h, lam_word);
    IntInterval lam1 = zeck_lambda(int(n) + 1);
    IntInterval lam = zeck_lambda(int(n));
    IntInterval psi = zeck_psi(int(n));
    auto left = constancy_points(lam1.lo, lam1.hi);
    auto shifted = constancy_points(psi.lo, psi.hi);
    std::int64_t shift = fib(int(n) + 1) + (perturbed ? 1 : 0);
    for (auto& v : shifted) v += shift;
    if (auto f = compare_values(shifted, left)) {
      auto g = tag(*f, "interval shift");
      g.n = n;
      return g;
    }
    if (auto f = compare_values(word_values(psi_word),
                                constancy_delta_word(psi.lo, psi.hi))) {
      auto g = tag(*f, "prefix interval word");
      g.n = n;
      return g;
    }
    if (auto f = compare_values(word_values(lam_word),
                                constancy_delta_word(lam.lo, lam.hi))) {
      auto g = tag(*f, "interval word");
      g.n = n;
      return g;
    }
    lam_word = std::move(psi_word);
  }
  return std::nullopt;
}

std::optional<FirstFailure> check_phi_gamma(std::int64_t& bound, bool perturbed,
                                           std::string& note) {
  note = "graded decorated fixed point vs digit sums of greedy expansions";
  auto brute = sbeta_prefix(bound);
  auto formula = graded_decorated_output(gamma_morphism(), gamma_seed(),
                                         gamma_decoration(), std::size_t(bound));
  if (perturbed)
    for (auto& v : formula) ++v;
  return compare_values(formula, brute);
}

std::optional<FirstFailure> check_phi_rst(std::int64_t& bound, bool perturbed,
                                         std::string& note) {
  note = "recursive interval construction vs greedy expansion";
  std::vector<std::string> base = {"0.",        "1.",        "10.01",
                                   "100.01",    "101.01",    "1000.1001",
                                   "1010.0001", "10000.0001"};
  if (perturbed) base[7] = "1010.0001";
  for (std::int64_t n = 0; n <= bound; ++n) {
    PhiExpansion a =
        perturbed ? beta_expand_rst_with_base(n, base) : beta_expand_rst(n);
    PhiExpansion b = beta_expand(n);
    if (!(a == b)) return FirstFailure{n, to_string(b), to_string(a)};
  }
  return std::nullopt;
}

std::optional<FirstFailure> check_phi_sigma(std::int64_t& bound,
                                           bool perturbed, std::string& note) {
  bound = std::clamp<std::int64_t>(bound, 5, 30);
  note =
      "interval codes are sigma-iterates; decoration weights tile the "
      "intervals; the code stream decorates the fixed point of g";
  const Morphism& sigma = find_catalog("sigma")->morphism;
  if (psi_code(0) != Word{"c0"} || psi_code(1) != Word{"c1"})
    return FirstFailure{0, "c0 and c1", "base codes differ"};
  Word even_word = {perturbed ? "c3" : "c2"};
  Word odd_word = {perturbed ? "c2" : "c3"};
  for (std::int64_t m = 2; m <= bound; ++m) {
    Word& iterate = (m % 2 == 0) ? even_word : odd_word;
    if (auto f = compare_words(iterate, psi_code(int(m)))) {
      auto g = tag(*f, "interval code");
      g.n = m;
      return g;
    }
    iterate = phikit::apply(sigma, iterate);
  }
  auto weight = [](const Symbol& s) -> std::int64_t { return s == "c1" ? 1 : 2; };
  for (std::int64_t m = 0; m <= bound; ++m) {
    std::int64_t total = 0;
    for (const auto& s : psi_code(int(m))) total += weight(s);
    std::int64_t len = lucas_interval(int(m)).length();
    if (total != len)
      return FirstFailure{m, "decorated length " + std::to_string(len),
                          "decorated length " + std::to_string(total)};
  }
  std::size_t want = 10000;
  Word stream = code_stream(want);
  Word decorated = sigma_cover_decoration().apply(g_word("a", "b", want));
  decorated.resize(want);
  if (auto f = compare_words(decorated, stream)) return tag(*f, "code stream");
  return std::nullopt;
}

std::optional<FirstFailure> check_phi_complexity(std::int64_t& bound,
                                                bool perturbed,
                                                std::string& note) {
  bound = std::clamp<std::int64_t>(bound, 1, 400);
  note = "factor counts of the code stream at two window sizes vs n + 3";
  std::int64_t window = std::max<std::int64_t>(2000, 60 * bound);
  Word stream = code_stream(std::size_t(2 * window));
  Word half(stream.begin(), stream.begin() + window);
  for (std::int64_t n = 1; n <= bound; ++n) {
    std::int64_t claimed = n + 3 + (perturbed ? 1 : 0);
    auto counted = std::int64_t(factor_complexity(half, std::size_t(n)));
    if (counted == claimed)
      counted = std::int64_t(factor_complexity(stream, std::size_t(n)));
    if (counted != claimed)
      return FirstFailure{n, std::to_string(counted), std::to_string(claimed)};
  }
  return std::nullopt;
}

std::optional<FirstFailure> check_phi_gbs(std::int64_t& bound, bool perturbed,
                                         std::string& note) {
  note =
      "classes vs unions: increase (1,2,0) n>=0 u (4,3,1) n>=0; constancy "
      "(3,1,1) n>=1 u (4,3,2) n>=0 u (7,4,2) n>=1 u (11,7,4) n>=0; decrease "
      "(4,3,-1) u (7,4,0) u (7,4,4) n>=1";
  auto c = classify(sbeta_prefix(bound + 2));
  Gbs i1{1, 2, 0, 0};
  if (perturbed) ++i1.r;
  auto iu = merge_union({i1, {4, 3, 1, 0}}, bound);
  if (iu.duplicate)
    return FirstFailure{*iu.duplicate, "increase parts disjoint",
                        "value produced twice"};
  if (auto f = compare_values(iu.terms, c.increase))
    return tag(*f, "increase");
  auto cu =
      merge_union({{3, 1, 1, 1}, {4, 3, 2, 0}, {7, 4, 2, 1}, {11, 7, 4, 0}},
                  bound);
  if (cu.duplicate)
    return FirstFailure{*cu.duplicate, "constancy parts disjoint",
                        "value produced twice"};
  if (auto f = compare_values(cu.terms, c.constancy))
    return tag(*f, "constancy");
  auto du = merge_union({{4, 3, -1, 1}, {7, 4, 0, 1}, {7, 4, 4, 1}}, bound);
  if (du.duplicate)
    return FirstFailure{*du.duplicate, "decrease parts disjoint",
                        "value produced twice"};
  if (auto f = compare_values(du.terms, c.decrease))
    return tag(*f, "decrease");
  return std::nullopt;
}

std::optional<FirstFailure> check_phi_morph(std::int64_t& bound,
                                           bool perturbed, std::string& note) {
  note =
      "class difference words vs fixed points of dIbeta, dCbeta (projected), "
      "dDbeta (left shift)";
  auto c = classified_min_points(true, std::size_t(bound) + 1);
  auto finish = [&](std::vector<std::int64_t> formula,
                    const std::vector<std::int64_t>& points, const char* name)
      -> std::optional<FirstFailure> {
    auto expected = diffs(points);
    expected.resize(std::size_t(bound));
    if (perturbed)
      for (auto& v : formula) ++v;
    if (auto f = compare_values(formula, expected)) return tag(*f, name);
    return std::nullopt;
  };
  const CatalogEntry* di = find_catalog("dIbeta");
  if (auto f = finish(
          word_values(fixed_point(di->morphism, di->seed, std::size_t(bound))),
          c.increase, "increase"))
    return f;
  const CatalogEntry* dc = find_catalog("dCbeta");
  Word coded = dc->coding->apply(
      fixed_point(dc->morphism, dc->seed, std::size_t(bound)));
  if (auto f = finish(word_values(coded), c.constancy, "constancy")) return f;
  const CatalogEntry* dd = find_catalog("dDbeta");
  Word shifted =
      fixed_point(dd->morphism, dd->seed, std::size_t(bound) + 1);
  shifted.erase(shifted.begin());
  if (auto f = finish(word_values(shifted), c.decrease, "decrease")) return f;
  return std::nullopt;
}

std::optional<FirstFailure> check_phi_types(std::int64_t& bound,
                                           bool perturbed, std::string& note) {
  note =
      "suffix types 000/001 mark exactly the points of increase; their "
      "positions form V(1,2,0) n>=0 and V(4,3,1) n>=0";
  auto f = sbeta_prefix(bound + 2);
  std::vector<std::int64_t> b_points, e_points;
  for (std::int64_t n = 0; n <= bound; ++n) {
    SuffixType t = suffix_type(n);
    bool increases = f[std::size_t(n) + 1] > f[std::size_t(n)];
    if ((t != SuffixType::Neither) != increases)
      return FirstFailure{n,
                          increases ? "a typed point of increase"
                                    : "an untyped non-increase point",
                          t == SuffixType::B   ? "type 000"
                          : t == SuffixType::E ? "type 001"
                                               : "no type"};
    if (t == SuffixType::B) b_points.push_back(n);
    if (t == SuffixType::E) e_points.push_back(n);
  }
  Gbs bg{1, 2, 0, 0};
  if (perturbed) ++bg.r;
  if (auto g = compare_values(merge_union({bg}, bound).terms, b_points))
    return tag(*g, "type 000 positions");
  if (auto g =
          compare_values(merge_union({{4, 3, 1, 0}}, bound).terms, e_points))
    return tag(*g, "type 001 positions");
  return std::nullopt;
}

std::optional<FirstFailure> check_phi_returnword(std::int64_t& bound,
                                                bool perturbed,
                                                std::string& note) {
  note =
      "difference word of V(1,2,0) is the fixed point of 4->344, 3->34; its "
      "returns to 3 induce 7->7 11, 11->7 11 11; return words of the code "
      "stream";
  auto terms = gbs_terms({1, 2, 0, 0}, std::size_t(bound) + 1);
  auto d = diffs(terms);
  Word w;
  for (auto v : d) w.push_back(std::to_string(v));
  Morphism g43 = g_morphism("4", "3");
  Word fp = fixed_point(g43, "3", std::size_t(bound));
  if (perturbed)
    for (auto& s : fp) s = std::to_string(std::stoll(s) + 1);
  if (auto f = compare_words(fp, w)) return tag(*f, "difference word");
  auto rw = return_words(w, Word{"3"});
  std::vector<Word> expected_returns = {{"3", "4"}, {"3", "4", "4"}};
  if (rw.words != expected_returns)
    return FirstFailure{0, words_to_string(expected_returns),
                        words_to_string(rw.words)};
  auto digit_sum_name = [](const Word& u) {
    std::int64_t s = 0;
    for (const auto& letter : u) s += std::stoll(letter);
    return std::to_string(s);
  };
  Morphism derived = derived_morphism(
      g43, "3", Word{"3"}, std::size_t(std::max<std::int64_t>(bound, 2000)),
      digit_sum_name);
  Morphism want({{"7", {"7", "11"}}, {"11", {"7", "11", "11"}}});
  if (derived.rules() != want.rules())
    return FirstFailure{0, rules_to_string(want), rules_to_string(derived)};
  if (!morphisms_isomorphic(derived, "7", g_morphism("11", "7"), "7"))
    return FirstFailure{0, "derived morphism isomorphic to 11->7 11 11, 7->7 11",
                        rules_to_string(derived)};
  Word stream = code_stream(std::size_t(std::max<std::int64_t>(bound, 2000)));
  auto r0 = return_words(stream, Word{"c0"});
  std::vector<Word> expect0 = {{"c0", "c1", "c2", "c3"},
                               {"c0", "c1", "c2", "c3", "c2", "c3"}};
  if (r0.words != expect0)
    return FirstFailure{0, words_to_string(expect0), words_to_string(r0.words)};
  auto r2 = return_words(stream, Word{"c2"});
  std::vector<Word> expect2 = {{"c2", "c3", "c0", "c1"}, {"c2", "c3"}};
  if (r2.words != expect2)
    return FirstFailure{0, words_to_string(expect2), words_to_string(r2.words)};
  return std::nullopt;
}

std::optional<FirstFailure> check_gbs_lemma1(std::int64_t& bound,
                                            bool perturbed,
                                            std::string& note) {
  note =
      "random parameters: differences form the two-letter Fibonacci word and "
      "recover the parameters";
  std::mt19937_64 rng(987654321);
  std::uniform_int_distribution<std::int64_t> pq(-5, 5), rr(-10, 10);
  for (std::int64_t trial = 0; trial < bound; ++trial) {
    std::int64_t p, q;
    do {
      p = pq(rng);
      q = pq(rng);
    } while (!gbs_increasing({p, q, 0, 1}));
    Gbs v{p, q, rr(rng), 1};
    auto terms = gbs_terms(v, 1000);
    auto d = diffs(terms);
    std::vector<std::int64_t> formula;
    if (p == 0)
      formula.assign(d.size(), q);
    else
      formula = word_values(fibonacci_word(std::to_string(2 * p + q),
                                           std::to_string(p + q), d.size()));
    if (auto f = compare_values(formula, d)) {
      auto g = tag(*f, "differences");
      g.n = trial;
      return g;
    }
    std::int64_t a = d[0], b = a;
    for (auto x : d)
      if (x != a) {
        b = x;
        break;
      }
    Gbs back = gbs_from_delta(a, b, terms[0]);
    if (perturbed) ++back.r;
    if (!(back == v))
      return FirstFailure{
          trial,
          "(" + std::to_string(v.p) + "," + std::to_string(v.q) + "," +
              std::to_string(v.r) + ")",
          "(" + std::to_string(back.p) + "," + std::to_string(back.q) + "," +
              std::to_string(back.r) + ")"};
  }
  return std::nullopt;
}

std::optional<FirstFailure> check_gbs_lemma2(std::int64_t& bound,
                                            bool perturbed,
                                            std::string& note) {
  note =
      "composition with the two Wythoff sequences matches the closed forms "
      "and splits the sequence";
  std::mt19937_64 rng(123456789);
  std::uniform_int_distribution<std::int64_t> pq(-5, 5), rr(-10, 10);
  for (std::int64_t trial = 0; trial < bound; ++trial) {
    std::int64_t p, q;
    do {
      p = pq(rng);
      q = pq(rng);
    } while (!gbs_increasing({p, q, 0, 1}));
    Gbs v{p, q, rr(rng), 1};
    Gbs lower = compose_A(v), upper = compose_B(v);
    if (perturbed) ++lower.r;
    for (std::int64_t n = 1; n <= 100; ++n) {
      std::int64_t a_n = floor_mul_phi(n);
      if (gbs_term(v, a_n) != gbs_term(lower, n))
        return FirstFailure{trial, std::to_string(gbs_term(v, a_n)),
                            std::to_string(gbs_term(lower, n))};
      if (gbs_term(v, a_n + n) != gbs_term(upper, n))
        return FirstFailure{trial, std::to_string(gbs_term(v, a_n + n)),
                            std::to_string(gbs_term(upper, n))};
    }
    auto u = merge_union({lower, upper}, gbs_term(v, 100));
    if (u.duplicate)
      return FirstFailure{trial, "compositions disjoint",
                          "value produced twice"};
    if (auto f = compare_values(u.terms, gbs_terms(v, 100))) {
      auto g = tag(*f, "split");
      g.n = trial;
      return g;
    }
  }
  return std::nullopt;
}

std::optional<FirstFailure> check_gbs_triple(std::int64_t& bound,
                                            bool perturbed,
                                            std::string& note) {
  note =
      "V(1,1,0), V(2,1,0), V(1,1,-1) partition the positive integers, as do "
      "V(1,1,0), V(2,1,0), V(3,2,-1), V(2,1,-2)";
  Gbs third{1, 1, -1, 1};
  if (perturbed) ++third.r;
  auto triple = is_partition({{1, 1, 0, 1}, {2, 1, 0, 1}, third}, 1, bound);
  if (!triple.ok)
    return FirstFailure{triple.first_violation.value_or(-1),
                        "covered exactly once by the triple",
                        "gap or double cover"};
  auto quad = is_partition(
      {{1, 1, 0, 1}, {2, 1, 0, 1}, {3, 2, -1, 1}, {2, 1, -2, 1}}, 1, bound);
  if (!quad.ok)
    return FirstFailure{quad.first_violation.value_or(-1),
                        "covered exactly once by the quadruple",
                        "gap or double cover"};
  return std::nullopt;
}

std::optional<FirstFailure> check_phi_parity(std::int64_t& bound,
                                            bool perturbed,
                                            std::string& note) {
  note = "decorated output reduced mod 2 vs digit-sum parity";
  auto brute = sbeta_prefix(bound);
  for (auto& v : brute) v &= 1;
  auto formula = graded_decorated_output(gamma_morphism(), gamma_seed(),
                                         gamma_decoration(), std::size_t(bound));
  for (auto& v : formula) v &= 1;
  if (perturbed)
    for (auto& v : formula) v ^= 1;
  return compare_values(formula, brute);
}

struct CheckDef {
  const char* id;
  std::int64_t def_bound;
  std::optional<FirstFailure> (*fn)(std::int64_t&, bool, std::string&);
};

const CheckDef kChecks[] = {
    {"zeck.tau", 1000000, check_zeck_tau},
    {"zeck.gbs", 1000000, check_zeck_gbs},
    {"zeck.morph", 100000, check_zeck_morph},
    {"zeck.recursion", 25, check_zeck_recursion},
    {"phi.gamma", 1000000, check_phi_gamma},
    {"phi.rst", 100000, check_phi_rst},
    {"phi.sigma", 24, check_phi_sigma},
    {"phi.complexity", 200, check_phi_complexity},
    {"phi.gbs", 1000000, check_phi_gbs},
    {"phi.morph", 100000, check_phi_morph},
    {"phi.types", 100000, check_phi_types},
    {"phi.returnword", 10000, check_phi_returnword},
    {"gbs.lemma1", 1000, check_gbs_lemma1},
    {"gbs.lemma2", 1000, check_gbs_lemma2},
    {"gbs.triple", 1000000, check_gbs_triple},
    {"phi.parity", 1000000, check_phi_parity},
};

const CheckDef* find_def(const std::string& id) {
  for (const auto& d : kChecks)
    if (id == d.id) return &d;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : kChecks) v.emplace_back(d.id);
    return v;
  }();
  return ids;
}

std::int64_t default_bound(const std::string& check_id) {
  const CheckDef* d = find_def(check_id);
  if (!d) throw std::invalid_argument("unknown check id: " + check_id);
  return d->def_bound;
}

CheckReport run_check(const std::string& check_id, std::int64_t bound,
                      bool perturbed) {
  const CheckDef* d = find_def(check_id);
  if (!d) throw std::invalid_argument("unknown check id: " + check_id);
  CheckReport rep;
  rep.check_id = check_id;
  std::int64_t b = bound > 0 ? bound : d->def_bound;
  auto t0 = std::chrono::steady_clock::now();
  std::optional<FirstFailure> fail;
  try {
    fail = d->fn(b, perturbed, rep.note);
  } catch (const std::exception& e) {
    fail = FirstFailure{-1, "computation completes",
                        std::string("exception: ") + e.what()};
  }
  auto t1 = std::chrono::steady_clock::now();
  rep.bound = b;
  rep.passed = !fail.has_value();
  rep.failure = std::move(fail);
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

std::vector<CheckReport> run_all(std::int64_t bound, bool perturbed) {
  std::vector<CheckReport> out;
  for (const auto& id : check_ids()) out.push_back(run_check(id, bound, perturbed));
  return out;
}

}  // namespace phikit
