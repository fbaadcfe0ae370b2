#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qlab {

using ParamValue = std::variant<long long, double, std::string>;
using ParamList = std::vector<std::pair<std::string, ParamValue>>;

// One verified identity. pass is true exactly when residual <= tolerance;
// a check that could not be evaluated carries the error name instead.
struct CheckResult {
  std::string name;
  ParamList params;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
  std::optional<int> terms_used;
  double runtime_ms = 0;
  std::string error;

  CheckResult& set(std::string key, ParamValue v) {
    params.emplace_back(std::move(key), std::move(v));
    return *this;
  }
  CheckResult& judge(double r, double tol) {
    residual = r;
    tolerance = tol;
    pass = std::isfinite(r) && r <= tol;
    return *this;
  }
};

}  // namespace qlab
