#include "holonet/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace holonet {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_heights_csv(std::ostream& os, const std::vector<HeightEstimate>& rows,
                       const FlatnessProfile& profile) {
  os << "n,r_n,height_lower_bound,budget,seed\n";
  for (const HeightEstimate& h : rows) {
    double r;
    if (profile.is_holder())
      r = r_value(profile, h.n);
    else
      r = h.n < profile.stored_size() ? r_value(profile, h.n) : 0.0;
    os << h.n << ',' << format_double(r) << ',' << format_double(h.lower_bound)
       << ',' << h.budget << ',' << h.seed << '\n';
  }
}

void write_net_csv(std::ostream& os, const NetLevel& level, int ambient_dim) {
  os << "level,eps,section_dim,point_index";
  for (int d = 0; d < ambient_dim; ++d) os << ",coord_" << d;
  os << '\n';
  for (int j = 0; j < level.count(); ++j) {
    os << level.level << ',' << format_double(level.eps) << ',' << level.section_dim
       << ',' << j;
    const Vector p = level.point_embedded(j, ambient_dim);
    for (int d = 0; d < ambient_dim; ++d) os << ',' << format_double(p[d]);
    os << '\n';
  }
}

void write_partition_trace_csv(std::ostream& os,
                               const std::vector<PartitionEval>& evals) {
  os << "query_id,level,cell_index,psi,phi,center_dist\n";
  for (std::size_t q = 0; q < evals.size(); ++q) {
    for (const PartitionEntry& e : evals[q].entries) {
      os << q << ',' << e.cell.level << ',' << e.cell.index << ','
         << format_double(e.psi) << ',' << format_double(e.phi) << ','
         << format_double((evals[q].query - e.cell.center).norm()) << '\n';
    }
  }
}

void write_modulus_csv(std::ostream& os, const ModulusTable& table) {
  os << "t,omega_hat,pairs\n";
  for (const ModulusRow& row : table.rows)
    os << format_double(row.t) << ',' << format_double(row.omega_hat) << ','
       << row.pairs << '\n';
}

void write_divergence_csv(std::ostream& os, const std::vector<DivergenceRow>& rows) {
  os << "n,input_gap,output_gap,lower_bound,upper_bound_input\n";
  for (const DivergenceRow& row : rows)
    os << row.n << ',' << format_double(row.input_gap) << ','
       << format_double(row.output_gap) << ',' << format_double(row.lower_bound)
       << ',' << format_double(row.upper_bound_input) << '\n';
}

nlohmann::json descriptor_to_json(const FlatSetDescriptor& K) {
  nlohmann::json j;
  j["shape"] = K.shape() == SetShape::Box ? "box" : "cross_polytope";
  j["ambient_dim"] = K.ambient_dim();
  if (K.profile().is_holder()) {
    j["profile"] = {{"kind", "holder"}, {"alpha", K.profile().alpha()}};
  } else {
    j["profile"] = {{"kind", "explicit"}, {"values", K.profile().values()}};
  }
  return j;
}

FlatSetDescriptor descriptor_from_json(const nlohmann::json& j) {
  const std::string shape_name = j.at("shape").get<std::string>();
  SetShape shape;
  if (shape_name == "box")
    shape = SetShape::Box;
  else if (shape_name == "cross_polytope")
    shape = SetShape::CrossPolytope;
  else
    throw std::invalid_argument("descriptor_from_json: unknown shape '" + shape_name + "'");

  const nlohmann::json& p = j.at("profile");
  const std::string kind = p.at("kind").get<std::string>();
  FlatnessProfile profile = [&] {
    if (kind == "holder") return FlatnessProfile::holder(p.at("alpha").get<double>());
    if (kind == "explicit")
      return FlatnessProfile::explicit_values(p.at("values").get<std::vector<double>>());
    throw std::invalid_argument("descriptor_from_json: unknown profile kind '" + kind + "'");
  }();
  return FlatSetDescriptor(shape, std::move(profile), j.at("ambient_dim").get<int>());
}

nlohmann::json params_to_json(const NormFamilyParams& params) {
  return {{"delta", params.delta},
          {"mu", params.mu},
          {"max_index", params.max_index},
          {"ambient_dim", params.ambient_dim}};
}

NormFamilyParams params_from_json(const nlohmann::json& j) {
  return NormFamilyParams(j.at("delta").get<double>(), j.at("mu").get<double>(),
                          j.at("max_index").get<int>(), j.at("ambient_dim").get<int>());
}

nlohmann::json fit_to_json(const HolderFit& fit, double alpha, double c_impl,
                           std::uint64_t seed) {
  return {{"exponent", fit.exponent},
          {"log_constant", fit.log_constant},
          {"r_squared", fit.r_squared},
          {"t_min", fit.t_min},
          {"t_max", fit.t_max},
          {"points", fit.points},
          {"alpha", alpha},
          {"implementation_constant", c_impl},
          {"seed", seed}};
}

nlohmann::json checks_to_json(const std::vector<CheckResult>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const CheckResult& c : checks) {
    arr.push_back({{"check_name", c.check_name},
                   {"bound", c.bound},
                   {"measured", c.measured},
                   {"pass", c.pass},
                   {"seed", c.seed},
                   {"detail", c.detail}});
    all = all && c.pass;
  }
  return {{"checks", arr}, {"all_pass", all}};
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_text_file: cannot open " + path);
  os << contents;
  if (!os) throw std::runtime_error("write_text_file: write failed for " + path);
}

}  // namespace holonet
