#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "frz/frieze.hpp"

namespace frz {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FenceCmd {
  std::string word;
};
struct BandCmd {
  std::string word;
};
struct FriezeCmd {
  std::string quiddity;
  int rows = 8;
  bool show_zeros = false;
};
struct GrowthCmd {
  std::string quiddity;
  std::optional<int> k;
};
struct PolygonCmd {
  int n = 0;
  std::string diagonals;  // "1-3,1-4"
};
struct DiskAnalyzeCmd {
  std::string input;
  std::string format = "text";  // text | machine
};
struct DiskGenCmd {
  std::uint64_t seed = 0;
  int b = 0;
  int p = 0;
  int q = 0;
  std::string out;  // empty: stdout
};
struct DiskVerifyCmd {
  int random = 0;
  std::uint64_t seed = 0;
  std::optional<int> b;
  int pmax = 4;
  int qmax = 4;
};

using Command = std::variant<FenceCmd, BandCmd, FriezeCmd, GrowthCmd, PolygonCmd, DiskAnalyzeCmd,
                             DiskGenCmd, DiskVerifyCmd>;

// Validates argv into a Command; throws UsageError (exit code 2 territory).
// argv excludes the program name.
Command parse_args(const std::vector<std::string>& argv);

// Executes a command. Results go to out, diagnostics to err. Exit codes:
// 0 success, 1 verification failure or invalid frieze, 2 input errors.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

// Full entry point used by the binary.
int cli_main(int argc, char** argv);

}  // namespace frz
