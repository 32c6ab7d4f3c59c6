#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "holonet/flat_sets.hpp"
#include "holonet/gauge_norms.hpp"
#include "holonet/nearest_point.hpp"
#include "holonet/nets.hpp"
#include "holonet/retraction.hpp"
#include "holonet/whitney.hpp"

namespace holonet {

// All CSV emitters format doubles with %.17g so identical configurations and
// seeds reproduce byte-identical files.

std::string format_double(double v);

void write_heights_csv(std::ostream& os, const std::vector<HeightEstimate>& rows,
                       const FlatnessProfile& profile);
void write_net_csv(std::ostream& os, const NetLevel& level, int ambient_dim);
void write_partition_trace_csv(std::ostream& os,
                               const std::vector<PartitionEval>& evals);
void write_modulus_csv(std::ostream& os, const ModulusTable& table);
void write_divergence_csv(std::ostream& os, const std::vector<DivergenceRow>& rows);

nlohmann::json descriptor_to_json(const FlatSetDescriptor& K);
FlatSetDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json params_to_json(const NormFamilyParams& params);
NormFamilyParams params_from_json(const nlohmann::json& j);

nlohmann::json fit_to_json(const HolderFit& fit, double alpha, double c_impl,
                           std::uint64_t seed);

struct CheckResult {
  std::string check_name;
  double bound = 0.0;
  double measured = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  std::string detail;
};

nlohmann::json checks_to_json(const std::vector<CheckResult>& checks);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace holonet
