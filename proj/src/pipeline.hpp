#pragma once

#include <cstdint>
#include <string>

#include "io.hpp"

namespace ue {

struct RunConfig {
  std::string command;  // validate|classify|extract|embed|oracle|hilbert|
                        // pipeline|verify
  double epsilon = 1.0;
  std::size_t target = 8;
  std::string input_path;      // CSV or JSON matrix file
  std::string generator_json;  // inline generator config (alternative input)
  std::int64_t seed = -1;      // >= 0 overrides the generator seed
  std::string output_path;
  std::string format = "json";  // json|csv|newick|text
  double tolerance = -1.0;      // < 0: 1e-9 * diameter
  bool block_mode = false;
  std::size_t blocks = 4;     // block count in block mode
  std::string report_path;    // verify: report to re-check
  double oracle_bound = -1.0; // oracle: distortion bound (default 1+epsilon)
  std::size_t cap = 16;
  bool with_hilbert = false;  // pipeline: append Hilbert coordinates
};

struct RunOutcome {
  int exit_code = 0;  // 0 ok, 1 input/config error, 2 bound violation,
                      // 3 undecided extraction
  ordered_json report;
  std::string rendered;  // per the requested format
};

RunConfig config_from_json(const std::string& text);
ordered_json config_to_json(const RunConfig& cfg);

/// Executes one pipeline stage. Input/config errors and bound violations are
/// reported through the exit code and an "error" field, not exceptions.
RunOutcome run(const RunConfig& cfg);

}  // namespace ue
