#pragma once

#include <cstdint>
#include <string>

#include "adradar/config.hpp"

namespace adradar {

/// Batch experiment request. `experiment` is one of: golay-check,
/// radar-chain, planner-sweep, rate-sweep, misalignment, overhead,
/// reproduce-paper.
struct RunSpec {
  std::string experiment;
  std::string config_path;  // empty = built-in defaults
  std::string out_dir = ".";
  std::uint64_t seed = 1;
  int trials = 10000;
};

/// Runs the experiment, writing one CSV per curve plus summary.json into
/// out_dir. Returns 0 on success; validation problems raise
/// std::invalid_argument with a named-key diagnostic.
int run(const RunSpec& spec);

/// The configuration used when no --config is given (matches the shipped
/// configs/default.cfg).
Config default_config();

}  // namespace adradar
