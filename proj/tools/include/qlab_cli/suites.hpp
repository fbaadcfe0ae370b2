#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qlab_cli/report.hpp"

namespace qlab::cli {

// What a check body returns; the runner adds timing and error capture.
struct Outcome {
  double residual = 0;
  std::optional<int> terms_used;
  ParamList extra;  // appended to the declared params

  Outcome(double r, std::optional<int> terms = std::nullopt, ParamList more = {})
      : residual(r), terms_used(terms), extra(std::move(more)) {}
};

struct SuiteItem {
  std::string name;
  ParamList params;
  double tolerance = 0;
  std::function<Outcome()> body;
};

// Items of one suite in declaration order.
std::vector<SuiteItem> build_suite(Suite s, const SuiteConfig& cfg);

// Runs the items on up to `jobs` threads. Results keep declaration order and
// a thrown qlab::Error becomes a failed entry carrying the error name.
std::vector<CheckResult> run_items(const std::vector<SuiteItem>& items, int jobs = 1);

VerificationReport run_verification(const SuiteConfig& cfg, int jobs = 1);

}  // namespace qlab::cli
