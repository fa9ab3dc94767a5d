#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "phikit/basephi.hpp"
#include "phikit/beatty.hpp"
#include "phikit/catalog.hpp"
#include "phikit/morphism.hpp"
#include "phikit/spectrum.hpp"
#include "phikit/zeckendorf.hpp"

namespace {

void print_joined(const std::vector<std::int64_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) std::cout << ',';
    std::cout << v[i];
  }
  std::cout << '\n';
}

std::vector<std::int64_t> digit_sums(bool phi_side, std::int64_t lo,
                                     std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo; n <= hi; ++n)
    out.push_back(phi_side ? phikit::beta_digit_sum(n)
                           : phikit::zeck_digit_sum(n));
  return out;
}

std::vector<std::int64_t> class_points(bool phi_side, const std::string& cls,
                                       std::int64_t count) {
  std::int64_t len = 5 * count + 64;
  for (;;) {
    auto c = phikit::classify(digit_sums(phi_side, 0, len - 1));
    const auto& pts = cls == "inc"     ? c.increase
                      : cls == "const" ? c.constancy
                                       : c.decrease;
    if (std::int64_t(pts.size()) >= count)
      return {pts.begin(), pts.begin() + count};
    len *= 2;
  }
}

phikit::Word split_word(const std::string& s) {
  phikit::Word w;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) w.push_back(tok);
  return w;
}

int run_verify(const std::string& check, std::int64_t bound, bool json) {
  std::vector<phikit::CheckReport> reports;
  if (check.empty()) {
    reports = phikit::run_all(bound);
  } else {
    reports.push_back(phikit::run_check(check, bound));
  }
  bool all_passed = true;
  for (const auto& rep : reports) {
    all_passed = all_passed && rep.passed;
    if (json) {
      nlohmann::ordered_json rec;
      rec["check_id"] = rep.check_id;
      rec["bound"] = rep.bound;
      rec["status"] = rep.passed ? "pass" : "fail";
      if (rep.failure) {
        rec["first_failure"] = {{"n", rep.failure->n},
                                {"expected", rep.failure->expected},
                                {"actual", rep.failure->actual}};
      }
      rec["elapsed_ms"] = rep.elapsed_ms;
      std::cout << rec.dump() << '\n';
      continue;
    }
    std::cout << std::left << std::setw(16) << rep.check_id << std::right
              << std::setw(9) << rep.bound << "  "
              << (rep.passed ? "pass" : "FAIL") << std::setw(10)
              << std::fixed << std::setprecision(1) << rep.elapsed_ms
              << " ms  " << rep.note << '\n';
    if (rep.failure)
      std::cout << "    first failure at n=" << rep.failure->n
                << ": expected " << rep.failure->expected << "; got "
                << rep.failure->actual << '\n';
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeckendorf and base-phi numeration toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string numeration, cls = "inc", seq_name;
  std::int64_t n_arg = 0, from = 0, to = 0, count = 10;

  auto* expand = app.add_subcommand("expand", "print an expansion");
  expand->add_option("numeration", numeration)
      ->required()
      ->check(CLI::IsMember({"zeck", "phi"}));
  expand->add_option("n", n_arg)->required();
  expand->callback([&] {
    if (numeration == "zeck")
      std::cout << phikit::to_string(phikit::zeck_expand(n_arg)) << '\n';
    else
      std::cout << phikit::to_string(phikit::beta_expand(n_arg)) << '\n';
  });

  auto* sum = app.add_subcommand("sum", "print a digit sum");
  sum->add_option("numeration", numeration)
      ->required()
      ->check(CLI::IsMember({"zeck", "phi"}));
  sum->add_option("n", n_arg)->required();
  sum->callback([&] {
    std::cout << (numeration == "zeck" ? phikit::zeck_digit_sum(n_arg)
                                       : phikit::beta_digit_sum(n_arg))
              << '\n';
  });

  auto* seq = app.add_subcommand("seq", "print a digit-sum sequence range");
  seq->add_option("name", seq_name)
      ->required()
      ->check(CLI::IsMember({"sz", "sbeta"}));
  seq->add_option("--from", from)->required();
  seq->add_option("--to", to)->required();
  seq->callback([&] {
    if (from < 0 || to < from)
      throw std::invalid_argument("seq: need 0 <= from <= to");
    print_joined(digit_sums(seq_name == "sbeta", from, to));
  });

  auto* points = app.add_subcommand("points", "print sign-class points");
  points->add_option("numeration", numeration)
      ->required()
      ->check(CLI::IsMember({"zeck", "phi"}));
  points->add_option("--class", cls)
      ->required()
      ->check(CLI::IsMember({"inc", "const", "dec"}));
  points->add_option("--count", count)->required()->check(CLI::PositiveNumber);
  points->callback(
      [&] { print_joined(class_points(numeration == "phi", cls, count)); });

  std::int64_t p = 0, q = 0, r = 0, n0 = 1;
  auto* gbs = app.add_subcommand("gbs", "print generalized Beatty terms");
  gbs->add_option("--p", p)->required();
  gbs->add_option("--q", q)->required();
  gbs->add_option("--r", r)->required();
  gbs->add_option("--n0", n0)->check(CLI::Range(std::int64_t(0), std::int64_t(1)));
  gbs->add_option("--count", count)->required()->check(CLI::PositiveNumber);
  gbs->callback([&] {
    print_joined(
        phikit::gbs_terms({p, q, r, int(n0)}, std::size_t(count)));
  });

  std::string action, rules_file, rules_inline, catalog_name, seed;
  std::int64_t length = 0;
  auto* morph = app.add_subcommand("morphism", "evaluate a morphism");
  morph->add_option("action", action)
      ->required()
      ->check(CLI::IsMember({"fixpoint", "apply", "returns"}));
  auto* src = morph->add_option_group("rules source");
  src->add_option("--rules", rules_file, "rule file");
  src->add_option("--inline", rules_inline, "rule text");
  src->add_option("--catalog", catalog_name, "named catalog morphism");
  src->require_option(1);
  morph->add_option("--seed", seed);
  morph->add_option("--length", length)->check(CLI::NonNegativeNumber);
  morph->callback([&] {
    phikit::Morphism m;
    if (!catalog_name.empty()) {
      const phikit::CatalogEntry* entry = phikit::find_catalog(catalog_name);
      if (!entry)
        throw std::invalid_argument("unknown catalog morphism: " +
                                    catalog_name);
      m = entry->morphism;
      if (seed.empty()) seed = entry->seed;
    } else {
      std::string text = rules_inline;
      if (!rules_file.empty()) {
        std::ifstream in(rules_file);
        if (!in) throw std::invalid_argument("cannot read " + rules_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
      }
      m = phikit::parse_morphism(text);
    }
    if (seed.empty()) throw std::invalid_argument("morphism: --seed required");
    if (action == "apply") {
      std::cout << phikit::to_string(phikit::apply(m, split_word(seed)))
                << '\n';
      return;
    }
    if (length <= 0)
      throw std::invalid_argument("morphism: --length must be positive");
    phikit::Word fp = phikit::fixed_point(m, seed, std::size_t(length));
    if (action == "fixpoint") {
      std::cout << phikit::to_string(fp) << '\n';
      return;
    }
    auto rw = phikit::return_words(fp, phikit::Word{seed});
    for (const auto& w : rw.words) std::cout << phikit::to_string(w) << '\n';
  });

  std::string check_id;
  std::int64_t bound = 0;
  bool all = false, json = false;
  auto* verify = app.add_subcommand("verify", "run the verification harness");
  auto* check_opt = verify->add_option("--check", check_id, "single check id");
  verify->add_flag("--all", all, "run every check")->excludes(check_opt);
  verify->add_option("--bound", bound, "0 selects each check's default")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--json", json, "one record per line");
  verify->callback([&] { exit_code = run_verify(check_id, bound, json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
