#include <doctest.h>

#include <cmath>

#include "holonet/retraction.hpp"

using namespace holonet;

TEST_CASE("retract is the identity on the set") {
  Rng rng(41);
  for (const SetShape shape : {SetShape::Box, SetShape::CrossPolytope}) {
    const FlatSetDescriptor K(shape, FlatnessProfile::holder(0.5), 5);
    const WhitneyPartition part(K);
    for (int i = 0; i < 100; ++i) {
      const Vector x = sample_point(K, rng);
      CHECK((retract(part, x) - x).norm() == 0.0);
    }
  }
}

TEST_CASE("retract lands in the set with bounded displacement") {
  Rng rng(42);
  for (const SetShape shape : {SetShape::Box, SetShape::CrossPolytope}) {
    const FlatSetDescriptor K(shape, FlatnessProfile::holder(0.5), 5);
    const WhitneyPartition part(K);
    for (int i = 0; i < 200; ++i) {
      const double target = std::exp(rng.uniform(std::log(1e-4), 0.0));
      const Vector x = sample_at_distance(K, target, 2.0, rng);
      const Vector r = retract(part, x);
      // Convex combinations of net points can land an ulp outside the
      // membership test; measure the exact projection distance instead.
      CHECK(distance_to(K, r) <= 1e-12);
      CHECK((r - x).norm() <= 9.0 * target + 1e-9);
    }
  }
}

TEST_CASE("hand-computed retraction on the unit segment") {
  // From the trace at x = (2, 0): both active cells are centered at (1, 0),
  // so the retraction returns the endpoint exactly.
  const FlatSetDescriptor K(SetShape::Box, FlatnessProfile::explicit_values({2.0}), 2);
  const WhitneyPartition part(K);
  Vector x(2);
  x << 2.0, 0.0;
  const Vector r = retract(part, x);
  CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r[1] == 0.0);
}

TEST_CASE("empirical modulus table is monotone and reproducible") {
  const FlatSetDescriptor K(SetShape::Box, FlatnessProfile::holder(0.5), 4);
  const WhitneyPartition part(K);
  ModulusOptions opt;
  opt.t_grid = log_spaced(1e-3, 1e-1, 6);
  opt.pair_budget = 150;
  opt.seed = 99;
  const ModulusTable a = empirical_modulus(part, opt);
  REQUIRE(a.rows.size() == 6);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].omega_hat > 0.0);
    CHECK(a.rows[i].pairs == 150);
    if (i > 0) {
      CHECK(a.rows[i].t > a.rows[i - 1].t);
      CHECK(a.rows[i].omega_hat >= a.rows[i - 1].omega_hat);
    }
  }
  const ModulusTable b = empirical_modulus(part, opt);
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    CHECK(a.rows[i].omega_hat == b.rows[i].omega_hat);
}

TEST_CASE("holder_fit recovers a synthetic power law exactly") {
  ModulusTable table;
  for (int i = 0; i < 8; ++i) {
    ModulusRow row;
    row.t = std::pow(10.0, -4.0 + i * 0.4);
    row.omega_hat = 3.0 * std::pow(row.t, 0.63);
    row.pairs = 1;
    table.rows.push_back(row);
  }
  const HolderFit fit = holder_fit(table, 1e-4, 1.0);
  CHECK(fit.exponent == doctest::Approx(0.63).epsilon(1e-12));
  CHECK(std::exp(fit.log_constant) == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.points == 8);
}

TEST_CASE("holder_fit needs at least five usable rows") {
  ModulusTable table;
  for (int i = 0; i < 4; ++i) {
    ModulusRow row;
    row.t = std::pow(2.0, -i);
    row.omega_hat = row.t;
    table.rows.push_back(row);
  }
  CHECK_THROWS_AS(holder_fit(table, 0.0, 10.0), std::invalid_argument);
}

TEST_CASE("implementation constant is the smallest valid envelope factor") {
  const FlatnessProfile profile = FlatnessProfile::holder(0.5);
  ModulusTable table;
  for (int i = 0; i < 5; ++i) {
    ModulusRow row;
    row.t = std::pow(10.0, -3.0 + i * 0.5);
    row.omega_hat = 2.5 * std::pow(20.0, n_of_eps(profile, row.t / 20.0)) * row.t;
    table.rows.push_back(row);
  }
  const double c = implementation_constant(table, profile);
  CHECK(c == doctest::Approx(2.5).epsilon(1e-12));
  for (const ModulusRow& row : table.rows)
    CHECK(row.omega_hat <=
          c * std::pow(20.0, n_of_eps(profile, row.t / 20.0)) * row.t * (1.0 + 1e-12));
}

TEST_CASE("log_spaced endpoints are exact and counts respected") {
  const std::vector<double> g = log_spaced(1e-4, 1e-1, 8);
  REQUIRE(g.size() == 8);
  CHECK(g.front() == doctest::Approx(1e-4).epsilon(1e-12));
  CHECK(g.back() == doctest::Approx(1e-1).epsilon(1e-12));
  for (std::size_t i = 1; i < g.size(); ++i)
    CHECK(g[i] / g[i - 1] == doctest::Approx(g[1] / g[0]).epsilon(1e-9));
}
