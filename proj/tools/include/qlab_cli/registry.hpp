#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qlab_cli/report.hpp"

namespace qlab::cli {

using Args = std::map<std::string, std::string>;

struct EvalValue {
  double value = 0;
  std::optional<double> tail_bound;
  std::optional<int> terms_used;
};

struct FunctionInfo {
  std::string name;
  std::vector<std::string> keys;  // accepted arguments; optional ones in brackets
  std::string summary;
};

const std::vector<FunctionInfo>& registered_functions();

// Parses key=value tokens. Throws ArgumentError on a malformed token or a
// repeated key.
Args parse_args(const std::vector<std::string>& tokens);

// Throws UnknownFunction, ArgumentError naming the offending key, or the
// library error raised by the evaluation. Keys in `soft` may go unused; the
// CLI puts its global --q/--alpha values there.
EvalValue evaluate(const std::string& name, const Args& args,
                   const std::set<std::string>& soft = {});

// One swept argument, given as key=lo:hi:count.
struct Sweep {
  std::string key;
  double lo = 0;
  double hi = 0;
  int count = 0;
  std::vector<double> points() const;
};

// Splits off the single swept argument.
std::pair<Args, Sweep> split_sweep(const Args& args);

struct TableRow {
  double x = 0;
  EvalValue v;
};

std::vector<TableRow> tabulate(const std::string& name, const Args& fixed, const Sweep& sweep,
                               const std::set<std::string>& soft = {});

void write_table_csv(std::ostream& os, const Sweep& sweep, const std::vector<TableRow>& rows);
ordered_json table_json(const Sweep& sweep, const std::vector<TableRow>& rows);

}  // namespace qlab::cli
