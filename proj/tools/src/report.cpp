#include "qlab_cli/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "qlab/errors.hpp"

namespace qlab::cli {

namespace {

struct SuiteName {
  Suite s;
  const char* name;
};

constexpr SuiteName kSuites[] = {
    {Suite::all, "all"},
    {Suite::qcalculus, "qcalculus"},
    {Suite::special_functions, "special_functions"},
    {Suite::hermite_identities, "hermite_identities"},
    {Suite::orthogonality, "orthogonality"},
    {Suite::kernels, "kernels"},
    {Suite::oscillator_algebra, "oscillator_algebra"},
};

ordered_json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

double number_from(const ordered_json& j) {
  return j.is_null() ? std::nan("") : j.get<double>();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_string(Suite s) {
  for (const auto& e : kSuites)
    if (e.s == s) return e.name;
  return "all";
}

Suite parse_suite(const std::string& s) {
  for (const auto& e : kSuites)
    if (s == e.name) return e.s;
  throw ConfigError("unknown suite '" + s + "'");
}

const std::vector<Suite>& concrete_suites() {
  static const std::vector<Suite> v{Suite::qcalculus,     Suite::special_functions,
                                    Suite::hermite_identities, Suite::orthogonality,
                                    Suite::kernels,       Suite::oscillator_algebra};
  return v;
}

void SuiteConfig::validate() const {
  if (q_values.empty()) throw ConfigError("q_values is empty");
  if (alpha_values.empty()) throw ConfigError("alpha_values is empty");
  for (double q : q_values)
    if (!(q > 0 && q < 1)) throw ConfigError("q must lie in (0, 1), got " + format_number(q));
  for (double a : alpha_values)
    if (!(a > -1) || !std::isfinite(a)) throw ConfigError("alpha must exceed -1, got " + format_number(a));
  if (n_max < 0 || n_max > 40) throw ConfigError("n_max must lie in [0, 40]");
  if (dim < 3 || dim > 64) throw ConfigError("dim must lie in [3, 64]");
  if (!(tol > 0) || !(quad_tol > 0)) throw ConfigError("tolerances must be positive");
  if (max_terms < 1) throw ConfigError("max_terms must be positive");
}

void VerificationReport::tally() {
  summary = {};
  for (const auto& r : results) {
    ++summary.total;
    if (r.pass)
      ++summary.passed;
    else if (!r.error.empty())
      ++summary.errored;
    else
      ++summary.failed;
  }
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_params(const ParamList& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ';';
    out += k + '=';
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, std::string>)
            out += x;
          else if constexpr (std::is_same_v<T, double>)
            out += format_number(x);
          else
            out += std::to_string(x);
        },
        v);
  }
  return out;
}

ordered_json to_json(const SuiteConfig& c) {
  ordered_json j;
  j["suite"] = to_string(c.suite);
  j["q_values"] = c.q_values;
  j["alpha_values"] = c.alpha_values;
  j["n_max"] = c.n_max;
  j["tol"] = c.tol;
  j["quad_tol"] = c.quad_tol;
  j["dim"] = c.dim;
  j["seed"] = c.seed;
  j["max_terms"] = c.max_terms;
  return j;
}

SuiteConfig config_from_json(const ordered_json& j) {
  SuiteConfig c;
  c.suite = parse_suite(j.at("suite").get<std::string>());
  c.q_values = j.at("q_values").get<std::vector<double>>();
  c.alpha_values = j.at("alpha_values").get<std::vector<double>>();
  c.n_max = j.at("n_max").get<int>();
  c.tol = j.at("tol").get<double>();
  c.quad_tol = j.value("quad_tol", c.quad_tol);
  c.dim = j.at("dim").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.max_terms = j.value("max_terms", c.max_terms);
  return c;
}

ordered_json to_json(const CheckResult& r) {
  ordered_json j;
  j["name"] = r.name;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params)
    std::visit([&](const auto& x) {
      using T = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<T, double>)
        params[k] = number_or_null(x);
      else
        params[k] = x;
    }, v);
  j["params"] = params;
  j["residual"] = number_or_null(r.residual);
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  if (r.terms_used) j["terms_used"] = *r.terms_used;
  j["runtime_ms"] = r.runtime_ms;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

CheckResult result_from_json(const ordered_json& j) {
  CheckResult r;
  r.name = j.at("name").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) {
    if (v.is_number_integer())
      r.params.emplace_back(k, v.get<long long>());
    else if (v.is_number() || v.is_null())
      r.params.emplace_back(k, number_from(v));
    else
      r.params.emplace_back(k, v.get<std::string>());
  }
  r.residual = number_from(j.at("residual"));
  r.tolerance = j.at("tolerance").get<double>();
  r.pass = j.at("pass").get<bool>();
  if (j.contains("terms_used")) r.terms_used = j["terms_used"].get<int>();
  r.runtime_ms = j.value("runtime_ms", 0.0);
  r.error = j.value("error", std::string());
  return r;
}

ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  j["tool_version"] = r.tool_version;
  j["config"] = to_json(r.config);
  j["results"] = ordered_json::array();
  for (const auto& c : r.results) j["results"].push_back(to_json(c));
  j["summary"] = {{"total", r.summary.total},
                  {"passed", r.summary.passed},
                  {"failed", r.summary.failed},
                  {"errored", r.summary.errored}};
  return j;
}

VerificationReport report_from_json(const ordered_json& j) {
  VerificationReport r;
  r.tool_version = j.at("tool_version").get<std::string>();
  r.config = config_from_json(j.at("config"));
  for (const auto& c : j.at("results")) r.results.push_back(result_from_json(c));
  const auto& s = j.at("summary");
  r.summary = {s.at("total").get<int>(), s.at("passed").get<int>(), s.at("failed").get<int>(),
               s.at("errored").get<int>()};
  return r;
}

void write_csv(std::ostream& os, const VerificationReport& r) {
  os << "name,params,residual,tolerance,pass,terms_used,runtime_ms,error\n";
  for (const auto& c : r.results) {
    os << csv_field(c.name) << ',' << csv_field(format_params(c.params)) << ','
       << format_number(c.residual) << ',' << format_number(c.tolerance) << ','
       << (c.pass ? "true" : "false") << ',' << (c.terms_used ? std::to_string(*c.terms_used) : "")
       << ',' << format_number(c.runtime_ms) << ',' << csv_field(c.error) << '\n';
  }
}

}  // namespace qlab::cli
