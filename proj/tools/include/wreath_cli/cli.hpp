#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace wreath::cli {

using Json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, Info };
enum class Format { Json, Csv, Text };

const char* verdict_name(Verdict v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string subcommand;
  Json parameters = Json::object();
  Verdict verdict = Verdict::Info;
  std::optional<std::string> witness;  // first counterexample on FAIL
  Json payload = Json::object();
  Table table;
  /// Replaces the table in text output when set.
  std::vector<std::string> text_lines;
  std::optional<double> timing_ms;     // only rendered with --timing
};

struct CommandRequest {
  std::string subcommand;
  std::vector<int> args;
  std::string subgroup = "full";  // enumerate only
  Format format = Format::Json;
  std::string out;
  bool allow_large = false;
  std::uint64_t seed = 1;
  bool timing = false;
};

/// A request outside a guard or with malformed parameters (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Names accepted by dispatch, in help order.
const std::vector<std::string>& subcommands();

Report dispatch(const CommandRequest& req);

std::string render(const Report& report, Format format);

/// 0 for PASS and INFO, 1 for FAIL.
int exit_code(const Report& report);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wreath::cli
