#pragma once

// Command-line front end shared by the ddgen executable and its tests.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace ddgen::cli {

enum class Mode { Lists, Marked, Markable, DD, Oracle, Blocks };

const char* to_string(Mode m);

struct RunConfig {
  Mode mode = Mode::Marked;
  int n = 0;
  bool counts_only = false;
  std::string output;  // empty: standard output
  int part_index = 0;
  int part_count = 1;
  int jobs = 1;
  bool debug_validate = false;
  std::string oracle_what = "all";  // all | cq | marked | colourable | dd
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by parse_args for --help; what() holds the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments without the program name.
RunConfig parse_args(const std::vector<std::string>& args);

std::string summary_line(const RunConfig& cfg, std::int64_t count);

// Graphs go to `out` (or cfg.output), the summary line and errors to `err`.
// Returns the process exit status.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Number of objects the run would report, without writing anything.
std::int64_t count(const RunConfig& cfg);

}  // namespace ddgen::cli
