#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holonet/io.hpp"

namespace holonet {

struct VerifyOptions {
  std::uint64_t seed = 0;
  double budget_scale = 1.0;        // multiplies every sample budget
  std::vector<std::string> only;    // empty = run everything
};

// Names of all registered checks, in execution order (oracle equivalence
// runs first, gauge-family bounds after, partition/retraction invariants
// last).
std::vector<std::string> verify_check_names();

// Runs the named checks and returns one row per check.
// Unknown names in options.only throw std::invalid_argument.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

}  // namespace holonet
