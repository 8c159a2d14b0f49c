#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace linkc::cli {

enum class Command { kScore, kSweep, kPrune, kTruss, kSparsify, kBetweenness, kEval, kGen };

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kUnknownCommand = 3,
  kMissingFile = 4,
  kMalformedInput = 5,
};

struct RunConfig {
  Command command = Command::kScore;
  std::string input;
  std::string truth;
  std::string detected;
  std::string scores;
  std::string output;
  std::string density_output;
  std::string levels_output;
  std::string truth_output;
  std::string method = "mdcore";
  std::array<double, 3> weights{1.0, 1.0, 1.0};
  double exponent = 0.5;
  std::size_t n = 0;
  std::size_t communities = 0;
  double p_in = 0.0;
  double p_out = 0.0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

// One "key=value" line describing every resolved setting.
std::string describe(const RunConfig& config);

// Parses and executes one command. `args` excludes the program name. Data
// without an output path goes to `out`; the config echo and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linkc::cli
