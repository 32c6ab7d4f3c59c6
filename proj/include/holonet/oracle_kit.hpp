#pragma once

#include <cstdint>
#include <functional>

#include "holonet/types.hpp"

namespace holonet {

// Independent reference implementations used to certify the fast paths.
// Everything here favors transparency over speed and is meant for low
// dimensions and test budgets.

struct HullProblem {
  Matrix vertices;  // D x n, n >= 1
  Vector query;
};

struct MinNormResult {
  double distance = 0.0;
  Vector point;  // nearest point, a convex combination of the vertices
  int iterations = 0;
};

// Wolfe's min-norm-point algorithm over conv(vertices - query).  Terminates
// within 10 * n * D + 100 major iterations; `tol` controls the optimality
// test <x, v> >= ||x||^2 - tol.
MinNormResult min_norm_point(const HullProblem& problem, double tol = 1e-9);

struct Geo2Result {
  double max_lhs = 0.0;  // max over kept samples of d(x, conv(P))
  double rhs = 0.0;      // sqrt(max ||p||^2 - 1)
  int kept = 0;          // samples with ||x||_2 > 1
};

// Samples x = lambda p + (1 - lambda) b with p in conv(P), b on the unit
// sphere, keeps ||x||_2 > 1 and checks d(x, conv(P)) <= sqrt(sup ||P||^2 - 1).
// P must lie outside the open unit ball.  When P sits exactly on the sphere
// the kept set is empty and max_lhs stays 0.
Geo2Result geo2_check(const Matrix& P, int sample_budget, std::uint64_t seed);

// delta_2(eps) = 1 - sqrt(1 - (eps/2)^2) for eps in [0, 2].
double modulus_of_convexity_l2(double eps);

// (1 + 2 delta) sqrt(1 - ((1 - 10 delta)/(1 + 2 delta))^2); the family
// parameters require this to be < 1.  Domain (0, 1/48].
double delta_ineq_value(double delta);

// Brute-force distance oracle: min over grid points of [lo, hi] (step h per
// coordinate) that satisfy `member`.  Error <= h sqrt(dim) / 2 against the
// true set distance provided the true nearest point lies in the box.  Throws
// std::invalid_argument when no grid point qualifies or the grid would
// exceed ~2e8 points.
double grid_distance(const std::function<bool(const Vector&)>& member,
                     const Vector& query, const Vector& lo, const Vector& hi,
                     double step);

}  // namespace holonet
