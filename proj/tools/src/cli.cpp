#include "qlab_cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qlab/errors.hpp"
#include "qlab_cli/registry.hpp"
#include "qlab_cli/suites.hpp"

namespace qlab::cli {

namespace {

struct Options {
  std::vector<double> q;
  std::vector<double> alpha;
  int n_max = 8;
  int dim = 12;
  double tol = 1e-8;
  double quad_tol = 1e-6;
  std::string suite = "all";
  std::string format;
  std::string out_file;
  std::uint64_t seed = SuiteConfig{}.seed;
  int jobs = 1;
  std::string function;
  std::vector<std::string> kv;
};

std::optional<int> env_max_terms() {
  const char* s = std::getenv("QLAB_MAX_TERMS");
  if (!s || !*s) return std::nullopt;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 1 || v > 1000000) throw ConfigError("QLAB_MAX_TERMS must be a positive integer");
  return static_cast<int>(v);
}

// Writes to --out when given, otherwise to `out`.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_file);
  if (!f) throw ConfigError("cannot open output file '" + o.out_file + "'");
  f << text;
}

// Global --q/--alpha values become soft defaults for eval and table.
std::set<std::string> merge_flags(const Options& o, Args& args) {
  std::set<std::string> soft;
  auto put = [&](const char* key, const std::vector<double>& v) {
    if (v.empty()) return;
    if (v.size() > 1) throw ArgumentError(std::string("--") + key + " takes a single value here");
    if (args.emplace(key, format_number(v.front())).second) soft.insert(key);
  };
  put("q", o.q);
  put("alpha", o.alpha);
  if (auto mt = env_max_terms(); mt && args.emplace("max_terms", std::to_string(*mt)).second)
    soft.insert("max_terms");
  return soft;
}

int cmd_eval(const Options& o, std::ostream& out) {
  Args args = parse_args(o.kv);
  auto soft = merge_flags(o, args);
  EvalValue v = evaluate(o.function, args, soft);
  std::ostringstream s;
  if (o.format == "json") {
    ordered_json j;
    j["function"] = o.function;
    j["value"] = std::isfinite(v.value) ? ordered_json(v.value) : ordered_json(nullptr);
    if (v.tail_bound) j["tail_bound"] = *v.tail_bound;
    if (v.terms_used) j["terms_used"] = *v.terms_used;
    s << j.dump(2) << '\n';
  } else {
    s << format_number(v.value) << '\n';
    if (v.tail_bound) s << "tail_bound=" << format_number(*v.tail_bound) << '\n';
    if (v.terms_used) s << "terms_used=" << *v.terms_used << '\n';
  }
  emit(o, out, s.str());
  return kAllPass;
}

int cmd_table(const Options& o, std::ostream& out) {
  Args args = parse_args(o.kv);
  auto [fixed, sweep] = split_sweep(args);
  auto soft = merge_flags(o, fixed);
  auto rows = tabulate(o.function, fixed, sweep, soft);
  std::ostringstream s;
  if (o.format == "json")
    s << table_json(sweep, rows).dump(2) << '\n';
  else
    write_table_csv(s, sweep, rows);
  emit(o, out, s.str());
  return kAllPass;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteConfig cfg;
  cfg.suite = parse_suite(o.suite);
  if (!o.q.empty()) cfg.q_values = o.q;
  if (!o.alpha.empty()) cfg.alpha_values = o.alpha;
  cfg.n_max = o.n_max;
  cfg.dim = o.dim;
  cfg.tol = o.tol;
  cfg.quad_tol = o.quad_tol;
  cfg.seed = o.seed;
  if (auto mt = env_max_terms()) cfg.max_terms = *mt;
  if (o.jobs < 1) throw ConfigError("--jobs must be positive");
  cfg.validate();

  VerificationReport rep = run_verification(cfg, o.jobs);
  std::ostringstream s;
  if (o.format == "csv")
    write_csv(s, rep);
  else
    s << to_json(rep).dump(2) << '\n';
  emit(o, out, s.str());
  err << "verify " << to_string(cfg.suite) << ": " << rep.summary.passed << '/' << rep.summary.total
      << " passed, " << rep.summary.failed << " failed, " << rep.summary.errored << " errors\n";
  return rep.all_pass() ? kAllPass : kFailure;
}

int cmd_functions(std::ostream& out) {
  for (const auto& f : registered_functions()) {
    out << f.name;
    for (const auto& k : f.keys) out << ' ' << k;
    out << "\n    " << f.summary << '\n';
  }
  return kAllPass;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"qlab: generalized discrete q-Hermite II polynomials and their identities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto* q_opt = app.add_option("--q", o.q, "q values in (0,1), comma separated")->delimiter(',');
  auto* a_opt = app.add_option("--alpha", o.alpha, "alpha values > -1, comma separated")->delimiter(',');
  (void)q_opt;
  (void)a_opt;
  app.add_option("--n-max", o.n_max, "largest degree in the suites");
  app.add_option("--dim", o.dim, "matrix dimension for the algebra suite");
  app.add_option("--tol", o.tol, "tolerance for identity residuals without a fixed one");
  app.add_option("--quad-tol", o.quad_tol, "tolerance for quadrature-based checks");
  app.add_option("--suite", o.suite, "suite name")
      ->check(CLI::IsMember({"all", "qcalculus", "special_functions", "hermite_identities", "orthogonality",
                             "kernels", "oscillator_algebra"}));
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out_file, "write the output to FILE");
  app.add_option("--seed", o.seed, "seed for the randomized spot checks");
  app.add_option("--jobs", o.jobs, "worker threads for verify");

  auto* eval = app.add_subcommand("eval", "evaluate one library function");
  eval->add_option("function", o.function, "function name")->required();
  eval->add_option("args", o.kv, "key=value arguments");
  auto* table = app.add_subcommand("table", "tabulate a function over one swept argument key=lo:hi:count");
  table->add_option("function", o.function, "function name")->required();
  table->add_option("args", o.kv, "key=value arguments, one of them swept");
  auto* verify = app.add_subcommand("verify", "run a verification suite and write a report");
  auto* functions = app.add_subcommand("functions", "list the functions known to eval and table");
  for (auto* s : {eval, table, verify, functions}) s->fallthrough();

  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kAllPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*table) return cmd_table(o, out);
    if (*verify) return cmd_verify(o, out, err);
    return cmd_functions(out);
  } catch (const ConfigError& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const ArgumentError& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownFunction& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace qlab::cli
