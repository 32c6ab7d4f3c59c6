#pragma once

#include <cstdint>
#include <vector>

#include "holonet/whitney.hpp"

namespace holonet {

// R(x): exact projection within kOnSetThreshold of K, otherwise the
// phi-weighted combination of active cell centers.  Off K the result is a
// convex combination of net points, hence lies in K, and the active-cell
// support bound keeps ||R(x) - x|| <= 9 d(x, K).
Vector retract(const WhitneyPartition& partition, const Vector& x);

struct ModulusRow {
  double t = 0.0;
  double omega_hat = 0.0;  // cumulative max: non-decreasing in t
  int pairs = 0;
};

struct ModulusTable {
  std::vector<ModulusRow> rows;
  std::uint64_t seed = 0;
  int pair_budget = 0;
};

struct ModulusOptions {
  std::vector<double> t_grid;      // ascending
  int pair_budget = 2000;          // pairs per t value
  std::uint64_t seed = 0;
  double box_halfwidth = 2.0;      // sampling box [-w, w]^D
  double dist_floor = 1e-4;        // strata for d(., K): log-uniform in
  double dist_ceiling = 1.0;       //   [floor, ceiling]
};

// Empirical modulus of continuity: omega_hat(t) = max ||R(x) - R(y)|| over
// sampled pairs with ||x - y|| <= t.  Pairs are stratified by d(., K)
// log-uniformly over [dist_floor, dist_ceiling]; both endpoints are kept
// inside the strata.  Post-processed by cumulative max so the table is
// monotone.  Deterministic for a fixed seed regardless of worker count.
ModulusTable empirical_modulus(const WhitneyPartition& partition,
                               const ModulusOptions& options);

struct HolderFit {
  double exponent = 0.0;      // log-log least-squares slope
  double log_constant = 0.0;  // intercept (natural log)
  double r_squared = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
  int points = 0;
};

// Least-squares fit of log omega_hat against log t over rows with t in
// [t_min, t_max] and omega_hat > 0.  Throws std::invalid_argument with fewer
// than 5 usable rows.
HolderFit holder_fit(const ModulusTable& table, double t_min, double t_max);

// Smallest C with omega_hat(t) <= C * 20^{n(t/20)} * t across the table.
double implementation_constant(const ModulusTable& table, const FlatnessProfile& profile);

std::vector<double> log_spaced(double lo, double hi, int count);

}  // namespace holonet
