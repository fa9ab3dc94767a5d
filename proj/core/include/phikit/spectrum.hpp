#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Verification harness.  Each check compares a structural description of a
// digit-sum sequence (morphism fixed point, generalized Beatty family,
// interval recursion, ...) against values recomputed from the expansions
// themselves.  Checks are keyed by stable string ids so the CLI and tests can
// run them selectively.

namespace phikit {

enum class SignClass { Increase, Constancy, Decrease };

// Points N with f(N+1) > f(N), = f(N), < f(N).  f must hold at least two
// values; N ranges over [0, |f|-2].
struct Classified {
  std::vector<std::int64_t> increase;
  std::vector<std::int64_t> constancy;
  std::vector<std::int64_t> decrease;
};

Classified classify(const std::vector<std::int64_t>& f);

struct FirstFailure {
  std::int64_t n = 0;
  std::string expected;
  std::string actual;
  friend bool operator==(const FirstFailure&, const FirstFailure&) = default;
};

struct CheckReport {
  std::string check_id;
  std::int64_t bound = 0;
  bool passed = false;
  std::optional<FirstFailure> failure;
  double elapsed_ms = 0.0;
  std::string note;
};

// Ids in canonical run order.
const std::vector<std::string>& check_ids();

std::int64_t default_bound(const std::string& check_id);

// bound == 0 selects the default.  perturbed deliberately breaks the formula
// side of the comparison; a healthy harness must then report a failure.
CheckReport run_check(const std::string& check_id, std::int64_t bound = 0,
                      bool perturbed = false);

std::vector<CheckReport> run_all(std::int64_t bound = 0,
                                 bool perturbed = false);

}  // namespace phikit
