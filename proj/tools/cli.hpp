#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clusterlab/chain.hpp"
#include "clusterlab/serialize.hpp"
#include "clusterlab/spectra.hpp"

namespace clusterlab::cli {

inline constexpr const char* kCommands[] = {"state", "spectrum", "sweep", "string-order", "verify", "expand",
                                            "logicals"};

struct RunConfig {
  std::string command;
  ChainSpec chain;
  int grid = 101;                 // sweep points on [0, 1]
  int m = 4;                      // energies per sweep row
  std::optional<int> k;           // iterative solver: number of states
  double tol = 1e-8;              // iterative residual tolerance
  double check_tol = 1e-10;       // verify pass threshold
  SweepAxis axis = SweepAxis::Formula;
  std::optional<std::pair<int, int>> string_range;
  std::string state = "cluster";  // string-order: cluster, plus or ground
  std::optional<int> site;        // expand: single stabilizer
  std::uint64_t seed = 20240607;
  std::optional<int> jobs;
  std::string out;                // empty: stdout
  std::string format;             // empty: command default
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kComputationError = 1;
inline constexpr int kValidationError = 2;

Json config_to_json(const RunConfig& c);
// Applies the keys of j on top of base; unknown keys are rejected by name.
RunConfig config_from_json(const Json& j, RunConfig base = {});
std::vector<double> parse_angle_list(const std::string& text);

// Checks everything that can be checked before any computation.
void validate(const RunConfig& c);
std::string effective_format(const RunConfig& c);

// Runs a validated config. Output goes to c.out or to `out`.
int run(const RunConfig& c, std::ostream& out, std::ostream& err);

// Full command line entry point.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace clusterlab::cli
