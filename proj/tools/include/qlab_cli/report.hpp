#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qlab/check.hpp"

namespace qlab::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Suite { all, qcalculus, special_functions, hermite_identities, orthogonality, kernels,
                   oscillator_algebra };

std::string to_string(Suite s);
Suite parse_suite(const std::string& s);
const std::vector<Suite>& concrete_suites();

struct SuiteConfig {
  Suite suite = Suite::all;
  std::vector<double> q_values{0.3, 0.5, 0.8};
  std::vector<double> alpha_values{-0.5, 0.25, 1.3};
  int n_max = 8;
  double tol = 1e-8;       // identity residuals without a fixed tolerance
  double quad_tol = 1e-6;  // quadrature-based checks
  int dim = 12;
  std::uint64_t seed = 20240917;
  int max_terms = 400;

  // Throws ConfigError.
  void validate() const;
};

struct Summary {
  int total = 0;
  int passed = 0;
  int failed = 0;   // evaluated, residual above tolerance
  int errored = 0;  // could not be evaluated
};

struct VerificationReport {
  std::string tool_version = kToolVersion;
  SuiteConfig config;
  std::vector<CheckResult> results;
  Summary summary;

  void tally();
  bool all_pass() const { return summary.passed == summary.total; }
};

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const SuiteConfig& c);
SuiteConfig config_from_json(const ordered_json& j);
ordered_json to_json(const CheckResult& r);
CheckResult result_from_json(const ordered_json& j);
ordered_json to_json(const VerificationReport& r);
VerificationReport report_from_json(const ordered_json& j);

// Columns: name, params, residual, tolerance, pass, terms_used, runtime_ms,
// error. params are joined as key=value pairs separated by ';'.
void write_csv(std::ostream& os, const VerificationReport& r);

// Shortest decimal form that reads back to the same double.
std::string format_number(double v);
std::string format_params(const ParamList& p);

}  // namespace qlab::cli
