#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "repgrowth/report_json.hpp"

namespace repgrowth {

/// Exit codes beyond the 0/1/2 verdict codes.
inline constexpr int kExitUsage = 64;
inline constexpr int kExitPrecondition = 65;

struct CommandResult {
  Json json;
  Table table;
  int exit_code = 0;
};

struct BoundArgs {
  std::string family;
  int rank = 0;
  std::string n;
  int p = 0;
  PrecisionPolicy policy;
};
CommandResult cmd_bound(const BoundArgs& a);

struct SymBoundArgs {
  int r = 0;
  std::string n;
  int p = 0;
  std::string group = "S";
  PrecisionPolicy policy;
};
CommandResult cmd_sym_bound(const SymBoundArgs& a);

struct WitnessArgs {
  std::string engine;  // incr, middle, m-good, middle2, good, a5
  int rank = 0;
  std::string weight;  // "a1,a2,..."
  std::optional<int> m;
};
CommandResult cmd_witness(const WitnessArgs& a);

struct EnumerateArgs {
  std::string family = "A";
  int rank = 0;
  int p = 0;
  int n_max = 0;
  std::string bound = "nlambda";  // nlambda or premet
  std::size_t cap = 10'000'000;
  PrecisionPolicy policy;
};
/// One row per n in 1..n_max: restricted dominant lambda whose lower bound is
/// at most n, the rn_upper value at n, and value minus count.
CommandResult cmd_enumerate(const EnumerateArgs& a);

struct VerifyArgs {
  std::string suite;
  Scale scale = Scale::desk;
  PrecisionPolicy policy;
  std::size_t cap = 10'000'000;
};
CommandResult cmd_verify(const VerifyArgs& a);

struct MullineuxArgs {
  int p = 0;
  std::string partition;
};
CommandResult cmd_mullineux(const MullineuxArgs& a);

/// Weight from "a1,a2,...".
Weight parse_weight(const std::string& text);

/// Leaf-by-leaf (field, value) table of a JSON document.
Table flatten(const Json& j);

/// Full command line (args excludes the program name). Writes the report to
/// out and diagnostics to err; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace repgrowth
