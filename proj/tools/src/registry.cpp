#include "qlab_cli/registry.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <ostream>
#include <set>

#include "qlab/hermite.hpp"
#include "qlab/oscillator.hpp"

namespace qlab::cli {

namespace {

double to_double(const std::string& key, const std::string& s) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ArgumentError("argument '" + key + "' is not a number: '" + s + "'");
  return v;
}

// Typed access to key=value arguments. Every key must be consumed.
class Reader {
 public:
  explicit Reader(const Args& a) : args_(a) {}

  double real(const std::string& k) { return to_double(k, need(k)); }
  double real(const std::string& k, double dflt) { return has(k) ? real(k) : dflt; }

  int integer(const std::string& k) {
    double v = real(k);
    if (v != std::floor(v) || std::abs(v) > 1e9)
      throw ArgumentError("argument '" + k + "' must be an integer");
    return static_cast<int>(v);
  }
  int integer(const std::string& k, int dflt) { return has(k) ? integer(k) : dflt; }

  std::string text(const std::string& k) { return need(k); }
  std::string text(const std::string& k, const std::string& dflt) { return has(k) ? need(k) : dflt; }

  QContext context() {
    QContext c;
    c.q = real("q");
    c.alpha = real("alpha", 0.0);
    c.max_terms = integer("max_terms", c.max_terms);
    c.validate();
    return c;
  }
  QContext q_context() {
    QContext c;
    c.q = real("q");
    c.max_terms = integer("max_terms", c.max_terms);
    c.validate();
    return c;
  }

  void finish(const std::set<std::string>& soft) const {
    for (const auto& [k, v] : args_)
      if (!used_.count(k) && !soft.count(k)) throw ArgumentError("unknown argument '" + k + "'");
  }

 private:
  bool has(const std::string& k) {
    used_.insert(k);
    return args_.count(k) != 0;
  }
  const std::string& need(const std::string& k) {
    used_.insert(k);
    auto it = args_.find(k);
    if (it == args_.end()) throw ArgumentError("missing argument '" + k + "'");
    return it->second;
  }

  const Args& args_;
  std::set<std::string> used_;
};

template <class E>
E pick(const std::string& key, const std::string& s,
       std::initializer_list<std::pair<const char*, E>> table) {
  for (const auto& [n, e] : table)
    if (s == n) return e;
  throw ArgumentError("argument '" + key + "' has unknown value '" + s + "'");
}

EvalValue plain(double v) { return {v, std::nullopt, std::nullopt}; }
EvalValue truncated(const TruncatedValue<double>& t) { return {t.value, t.tail_bound, t.terms_used}; }

using Impl = std::function<EvalValue(Reader&)>;

struct Entry {
  FunctionInfo info;
  Impl impl;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"qpoch", {"a", "n", "q"}, "(a;q)_n"},
       [](Reader& r) { return plain(qpoch(r.real("a"), r.integer("n"), r.q_context())); }},
      {{"qpoch_inf", {"a", "q"}, "(a;q)_inf with tail bound"},
       [](Reader& r) { return truncated(qpoch_inf(r.real("a"), r.q_context())); }},
      {{"qnumber", {"x", "q"}, "(1-q^x)/(1-q)"},
       [](Reader& r) { return plain(qnumber(r.real("x"), r.q_context())); }},
      {{"sym_qnumber", {"x", "base"}, "(b^x - b^-x)/(b - 1/b)"},
       [](Reader& r) { return plain(sym_qnumber(r.real("x"), r.real("base"))); }},
      {{"gen_qint", {"n", "q", "alpha"}, "generalized q-integer [[n]]_{q,alpha}"},
       [](Reader& r) { return plain(gen_qint(r.integer("n"), r.context())); }},
      {{"gen_qpoch", {"n", "q", "alpha"}, "(q;q)_{n,alpha}"},
       [](Reader& r) { return plain(gen_qpoch(r.integer("n"), r.context())); }},
      {{"theta", {"n"}, "1 for even n, 0 for odd n"},
       [](Reader& r) { return plain(theta(r.integer("n"))); }},
      {{"monomial_delta_residual", {"n", "k", "x", "q", "alpha"}, "Delta^k x^n against its closed form"},
       [](Reader& r) {
         int n = r.integer("n"), k = r.integer("k");
         double x = r.real("x");
         return plain(monomial_delta_residual(n, k, x, r.context()));
       }},
      {{"qexp_big", {"z", "q", "[base]"}, "E_b(z) = (-z;b)_inf, b defaults to q"},
       [](Reader& r) {
         QContext c = r.q_context();
         double z = r.real("z");
         return truncated(qexp_big(z, r.real("base", c.q), c));
       }},
      {{"qexp_small", {"z", "q", "[base]"}, "e_b(z) = 1/(z;b)_inf, b defaults to q"},
       [](Reader& r) {
         QContext c = r.q_context();
         double z = r.real("z");
         return truncated(qexp_small(z, r.real("base", c.q), c));
       }},
      {{"qtrig", {"z", "which", "q", "[base]"}, "Cos_b or Sin_b"},
       [](Reader& r) {
         QContext c = r.q_context();
         double z = r.real("z");
         auto w = pick<TrigKind>("which", r.text("which"), {{"cos", TrigKind::cos}, {"sin", TrigKind::sin}});
         return plain(qtrig(z, w, r.real("base", c.q), c));
       }},
      {{"qexp_gen", {"z", "q", "alpha"}, "E_{q,alpha}(z)"},
       [](Reader& r) {
         double z = r.real("z");
         return plain(qexp_gen(z, r.context()));
       }},
      {{"qbessel", {"x", "order", "kind", "q"}, "second_jackson, hahn_exton or modified q-Bessel"},
       [](Reader& r) {
         double x = r.real("x"), nu = r.real("order");
         BesselKind k = parse_bessel_kind(r.text("kind"));
         return plain(qbessel(x, nu, k, r.q_context()));
       }},
      {{"bessel_delta_residual", {"n", "lambda", "x", "parity", "q", "alpha"},
        "Delta powers on j_alpha(lambda x)"},
       [](Reader& r) {
         int n = r.integer("n");
         double l = r.real("lambda"), x = r.real("x");
         auto p = pick<BesselParity>("parity", r.text("parity"),
                                     {{"even_order", BesselParity::even_order},
                                      {"odd_order", BesselParity::odd_order}});
         return plain(bessel_delta_residual(n, l, x, p, r.context()));
       }},
      {{"hermite_h", {"n", "x", "q", "alpha"}, "h_{n,alpha}(x;q), direct sum"},
       [](Reader& r) {
         int n = r.integer("n");
         double x = r.real("x");
         return plain(hermite_h(n, x, r.context()));
       }},
      {{"hermite_h_laguerre", {"n", "x", "q", "alpha"}, "h_{n,alpha}(x;q) through q-Laguerre"},
       [](Reader& r) {
         int n = r.integer("n");
         double x = r.real("x");
         QContext c = r.context();
         return plain(HermiteFamily<double>(c, std::max(n, 0)).h_laguerre(n, x));
       }},
      {{"qlaguerre", {"n", "order", "x", "q"}, "L_n^{(order)}(x;q^2)"},
       [](Reader& r) {
         int n = r.integer("n");
         double nu = r.real("order"), x = r.real("x");
         return plain(qlaguerre(n, nu, x, r.q_context()));
       }},
      {{"weight", {"x", "q", "alpha"}, "omega_alpha(x) = e_{q^2}(-q^{-2alpha-1} x^2)"},
       [](Reader& r) {
         double x = r.real("x");
         return plain(weight(x, r.context()));
       }},
      {{"norm_constants", {"n", "q", "alpha", "[field]"},
        "field = d | C | c | C_orthonormal | d_orthonormal (default d)"},
       [](Reader& r) {
         int n = r.integer("n");
         std::string f = r.text("field", "d");
         NormConstants k = norm_constants(n, r.context());
         return plain(pick<double>("field", f,
                                   {{"d", k.d}, {"C", k.C}, {"c", k.c}, {"C_orthonormal", k.C_orthonormal},
                                    {"d_orthonormal", k.d_orthonormal}}));
       }},
      {{"discrete_norm", {"n", "q", "alpha"}, "closed-form discrete squared norm"},
       [](Reader& r) {
         int n = r.integer("n");
         return plain(discrete_norm(n, r.context()));
       }},
      {{"continuous_gram", {"n", "m", "q", "alpha", "[normalization]"},
        "d_n d_m times the weighted line integral of h_n h_m"},
       [](Reader& r) {
         int n = r.integer("n"), m = r.integer("m");
         auto norm = pick<Normalization>("normalization", r.text("normalization", "orthonormal"),
                                         {{"orthonormal", Normalization::orthonormal},
                                          {"as_printed", Normalization::as_printed}});
         return plain(continuous_gram(n, m, r.context(), norm));
       }},
      {{"relation_residual", {"kind", "n", "x", "q", "alpha", "[z]"}, "structure relation residual"},
       [](Reader& r) {
         RelationKind k = parse_relation_kind(r.text("kind"));
         int n = r.integer("n", 0);
         double x = r.real("x"), z = r.real("z", 0.0);
         return plain(relation_residual(k, n, x, r.context(), z));
       }},
      {{"moment_check", {"n", "q", "alpha", "[form]"}, "Jackson moment against its closed form"},
       [](Reader& r) {
         int n = r.integer("n");
         auto f = pick<MomentForm>("form", r.text("form", "corrected"),
                                   {{"corrected", MomentForm::corrected}, {"as_printed", MomentForm::as_printed}});
         return plain(moment_check(n, r.context(), f));
       }},
      {{"bessel_weight_transform", {"x", "q", "alpha"}, "weight-Bessel transform residual"},
       [](Reader& r) {
         double x = r.real("x");
         auto d = bessel_weight_transform_detail(x, r.context());
         return EvalValue{d.residual, d.error_estimate, d.terms_used};
       }},
      {{"integral_representation_residual", {"n", "x", "parity", "q", "alpha"},
        "q-integral representation of h_{2n} or h_{2n+1}"},
       [](Reader& r) {
         int n = r.integer("n");
         double x = r.real("x");
         auto p = pick<Parity>("parity", r.text("parity"), {{"even", Parity::even}, {"odd", Parity::odd}});
         auto d = integral_representation_detail(n, x, p, r.context());
         return EvalValue{d.residual, d.error_estimate, d.terms_used};
       }},
      {{"poisson_kernel_residual", {"x", "y", "q", "alpha", "[which]"},
        "kernel at one, which = general | half_integer_corollary"},
       [](Reader& r) {
         double x = r.real("x"), y = r.real("y");
         auto w = pick<KernelMode>("which", r.text("which", "general"),
                                   {{"general", KernelMode::general},
                                    {"half_integer_corollary", KernelMode::half_integer_corollary}});
         auto d = poisson_kernel_detail(x, y, w, r.context());
         return EvalValue{d.residual, std::nullopt, d.terms_used};
       }},
      {{"bessel_expansion_residual", {"x", "q", "alpha"}, "Bessel expansion in even polynomials"},
       [](Reader& r) {
         double x = r.real("x");
         auto d = bessel_expansion_detail(x, r.context());
         return EvalValue{d.residual, std::nullopt, d.terms_used};
       }},
      {{"rogers_ramanujan_residual", {"q", "alpha", "[form]"}, "Rogers-Ramanujan type sum"},
       [](Reader& r) {
         auto f = pick<RRForm>("form", r.text("form", "corrected"),
                               {{"corrected", RRForm::corrected}, {"as_printed", RRForm::as_printed}});
         auto d = rogers_ramanujan_detail(r.context(), f);
         return EvalValue{d.residual, std::nullopt, d.terms_used};
       }},
      {{"phi", {"n", "x", "q", "alpha"}, "orthonormal basis function phi_n(x)"},
       [](Reader& r) {
         int n = r.integer("n");
         double x = r.real("x");
         return plain(phi(n, x, r.context()));
       }},
      {{"ladder_residual", {"n", "which", "q", "alpha"}, "pointwise a, a_plus or H action on phi_n"},
       [](Reader& r) {
         int n = r.integer("n");
         Ladder l = parse_ladder(r.text("which"));
         return plain(ladder_pointwise_residual(n, l, r.context()));
       }},
      {{"algebra_residual", {"relation", "dim", "q", "alpha"}, "matrix algebra relation residual"},
       [](Reader& r) {
         AlgebraRelation rel = parse_algebra_relation(r.text("relation"));
         int dim = r.integer("dim");
         return plain(algebra_residual(rel, dim, r.context()));
       }},
  };
  return table;
}

const Entry& find(const std::string& name) {
  for (const auto& e : entries())
    if (e.info.name == name) return e;
  throw UnknownFunction("unknown function '" + name + "'");
}

}  // namespace

const std::vector<FunctionInfo>& registered_functions() {
  static const std::vector<FunctionInfo> v = [] {
    std::vector<FunctionInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return v;
}

Args parse_args(const std::vector<std::string>& tokens) {
  Args a;
  for (const auto& t : tokens) {
    auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0) throw ArgumentError("expected key=value, got '" + t + "'");
    std::string k = t.substr(0, eq);
    if (!a.emplace(k, t.substr(eq + 1)).second) throw ArgumentError("argument '" + k + "' given twice");
  }
  return a;
}

EvalValue evaluate(const std::string& name, const Args& args, const std::set<std::string>& soft) {
  const Entry& e = find(name);
  Reader r(args);
  EvalValue v = e.impl(r);
  r.finish(soft);
  return v;
}

std::vector<double> Sweep::points() const {
  std::vector<double> p;
  for (int i = 0; i < count; ++i)
    p.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
  return p;
}

std::pair<Args, Sweep> split_sweep(const Args& args) {
  Args fixed;
  std::optional<Sweep> sweep;
  for (const auto& [k, v] : args) {
    auto c1 = v.find(':');
    if (c1 == std::string::npos) {
      fixed.emplace(k, v);
      continue;
    }
    auto c2 = v.find(':', c1 + 1);
    if (c2 == std::string::npos) throw ArgumentError("sweep '" + k + "' must be lo:hi:count");
    if (sweep) throw ArgumentError("only one swept argument is allowed, got '" + sweep->key + "' and '" + k + "'");
    Sweep s;
    s.key = k;
    s.lo = to_double(k, v.substr(0, c1));
    s.hi = to_double(k, v.substr(c1 + 1, c2 - c1 - 1));
    double n = to_double(k, v.substr(c2 + 1));
    if (n < 0 || n != std::floor(n)) throw ArgumentError("sweep '" + k + "' needs a nonnegative integer count");
    s.count = static_cast<int>(n);
    sweep = s;
  }
  if (!sweep) throw ArgumentError("table needs one swept argument key=lo:hi:count");
  return {fixed, *sweep};
}

std::vector<TableRow> tabulate(const std::string& name, const Args& fixed, const Sweep& sweep,
                               const std::set<std::string>& soft) {
  find(name);
  std::vector<TableRow> rows;
  for (double x : sweep.points()) {
    Args a = fixed;
    a[sweep.key] = format_number(x);
    rows.push_back({x, evaluate(name, a, soft)});
  }
  return rows;
}

void write_table_csv(std::ostream& os, const Sweep& sweep, const std::vector<TableRow>& rows) {
  bool tail = false;
  for (const auto& r : rows) tail = tail || r.v.tail_bound.has_value();
  os << sweep.key << ",value" << (tail ? ",tail_bound" : "") << '\n';
  for (const auto& r : rows) {
    os << format_number(r.x) << ',' << format_number(r.v.value);
    if (tail) os << ',' << (r.v.tail_bound ? format_number(*r.v.tail_bound) : "");
    os << '\n';
  }
}

ordered_json table_json(const Sweep& sweep, const std::vector<TableRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json o;
    o[sweep.key] = r.x;
    o["value"] = std::isfinite(r.v.value) ? ordered_json(r.v.value) : ordered_json(nullptr);
    if (r.v.tail_bound) o["tail_bound"] = *r.v.tail_bound;
    arr.push_back(o);
  }
  return arr;
}

}  // namespace qlab::cli
