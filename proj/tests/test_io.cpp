#include <doctest.h>

#include <sstream>

#include "holonet/io.hpp"

using namespace holonet;

TEST_CASE("doubles round-trip through the formatter") {
  for (const double v : {0.1, 1.0 / 3.0, 1e-17, 2.5e300, -0.0, 3.0}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("heights CSV has the contract header and one row per section") {
  const FlatSetDescriptor K(SetShape::Box, FlatnessProfile::explicit_values({1.0, 0.5}), 2);
  const auto rows = estimate_heights(K, 100, 5);
  std::ostringstream os;
  write_heights_csv(os, rows, K.profile());
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "n,r_n,height_lower_bound,budget,seed");
  int count = 0;
  while (std::getline(is, line)) ++count;
  CHECK(count == 3);
  // r past the stored range prints as 0 (the set lies inside that section).
  CHECK(os.str().find("\n2,0,") != std::string::npos);
}

TEST_CASE("net CSV embeds section points into ambient coordinates") {
  const FlatSetDescriptor K(SetShape::Box, FlatnessProfile::explicit_values({2.0}), 3);
  const NetLevel level = build_net(K, 0);
  std::ostringstream os;
  write_net_csv(os, level, 3);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "level,eps,section_dim,point_index,coord_0,coord_1,coord_2");
  std::getline(is, line);
  CHECK(line == "0,1,1,0,-1,0,0");
}

TEST_CASE("partition trace CSV lists active cells per query") {
  const FlatSetDescriptor K(SetShape::Box, FlatnessProfile::explicit_values({2.0}), 2);
  const WhitneyPartition part(K);
  Vector x(2);
  x << 2.0, 0.0;
  std::ostringstream os;
  write_partition_trace_csv(os, {part.partition_at(x)});
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "query_id,level,cell_index,psi,phi,center_dist");
  std::getline(is, line);
  CHECK(line.rfind("0,0,2,0.5,", 0) == 0);
}

TEST_CASE("modulus and divergence CSV headers") {
  ModulusTable table;
  table.rows.push_back({0.5, 0.25, 10});
  std::ostringstream ms;
  write_modulus_csv(ms, table);
  CHECK(ms.str() == "t,omega_hat,pairs\n0.5,0.25,10\n");

  DivergenceRow row;
  row.n = 2;
  row.input_gap = 0.25;
  row.output_gap = 0.5;
  row.lower_bound = 0.125;
  row.upper_bound_input = 0.25;
  std::ostringstream ds;
  write_divergence_csv(ds, {row});
  CHECK(ds.str() ==
        "n,input_gap,output_gap,lower_bound,upper_bound_input\n2,0.25,0.5,0.125,0.25\n");
}

TEST_CASE("descriptor JSON round-trip preserves geometry") {
  const FlatSetDescriptor box(SetShape::Box, FlatnessProfile::holder(0.7), 5);
  const FlatSetDescriptor back = descriptor_from_json(descriptor_to_json(box));
  CHECK(back.shape() == SetShape::Box);
  CHECK(back.ambient_dim() == 5);
  CHECK(back.profile().is_holder());
  CHECK(back.profile().alpha() == 0.7);
  CHECK((back.coeffs() - box.coeffs()).norm() == 0.0);

  const FlatSetDescriptor cross(SetShape::CrossPolytope,
                                FlatnessProfile::explicit_values({1.0, 0.25}), 3);
  const FlatSetDescriptor cback = descriptor_from_json(descriptor_to_json(cross));
  CHECK(cback.shape() == SetShape::CrossPolytope);
  CHECK(cback.profile().values() == cross.profile().values());
}

TEST_CASE("norm parameter JSON round-trip") {
  const double delta = 1.0 / 48.0;
  const NormFamilyParams p(delta, NormFamilyParams::mu_bound(delta), 12, 26);
  const NormFamilyParams back = params_from_json(params_to_json(p));
  CHECK(back.delta == p.delta);
  CHECK(back.mu == p.mu);
  CHECK(back.max_index == 12);
  CHECK(back.ambient_dim == 26);
}

TEST_CASE("check results serialize with the reporting schema") {
  CheckResult r;
  r.check_name = "geo2";
  r.bound = 0.5;
  r.measured = 0.25;
  r.pass = true;
  r.seed = 9;
  r.detail = "d";
  const nlohmann::json j = checks_to_json({r});
  REQUIRE(j.contains("checks"));
  REQUIRE(j["checks"].size() == 1);
  const auto& c = j["checks"][0];
  CHECK(c["check_name"] == "geo2");
  CHECK(c["bound"] == 0.5);
  CHECK(c["measured"] == 0.25);
  CHECK(c["pass"] == true);
  CHECK(c["seed"] == 9);
  CHECK(j["all_pass"] == true);

  CheckResult bad = r;
  bad.pass = false;
  CHECK(checks_to_json({r, bad})["all_pass"] == false);
}

TEST_CASE("identical inputs produce byte-identical CSV text") {
  const FlatSetDescriptor K(SetShape::CrossPolytope, FlatnessProfile::holder(0.5), 4);
  std::ostringstream a, b;
  write_heights_csv(a, estimate_heights(K, 300, 21), K.profile());
  write_heights_csv(b, estimate_heights(K, 300, 21), K.profile());
  CHECK(a.str() == b.str());
  CHECK(a.str().size() > 40);
}
