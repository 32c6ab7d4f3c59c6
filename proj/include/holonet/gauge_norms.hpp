#pragma once

#include <cstdint>

#include "holonet/types.hpp"

namespace holonet {

// Parameters of the strictly convex renorming family.  Guarded: delta in
// (0, 1/48], mu in (0, delta^3 / (132 (1 + 2 delta))], M >= 0, D >= 2M + 2.
// The separation inequality (1+2d) sqrt(1 - ((1-10d)/(1+2d))^2) < 1 is
// re-checked at construction.
struct NormFamilyParams {
  double delta;
  double mu;
  int max_index;    // M: largest gauge index in the family
  int ambient_dim;  // D

  NormFamilyParams(double delta, double mu, int max_index, int ambient_dim);

  static double mu_bound(double delta);  // delta^3 / (132 (1 + 2 delta))
};

// The distinguished vectors of index n (coordinates are 1-based in the
// formulas: e_1 is coordinate 0):
//   x_{i,n} = e_{2n} + (-1)^{i+1} (delta/n) e_{2n+1}
//   z_{i,n} = x_{i,n} + (-1)^i delta e_1
//   f_{i,n} = e_{2n} + (-1)^{i+1} (delta/2n) e_{2n+1}   (functional)
struct SpecialVectors {
  int n = 1;
  Vector x1, x2, z1, z2;
};

SpecialVectors special_vectors(const NormFamilyParams& params, int n);

// f_{i,n}(x); i in {1, 2}.
double functional_eval(const NormFamilyParams& params, int i, int n, const Vector& x);

struct GaugeResult {
  double value = 0.0;
  double c1 = 0.0;  // witness: value = ||x - c1 z1 - c2 z2||_2 + |c1| + |c2|
  double c2 = 0.0;
  double tolerance = 0.0;
};

// ||x||_n: gauge of conv({±z1, ±z2} ∪ B_l2).  Computed exactly through the
// infimal-convolution identity
//
//   ||x||_n = min_{c1,c2} ||x - c1 z1 - c2 z2||_2 + |c1| + |c2|,
//
// whose minimizer is either 0, on one of the four half-axes, or an interior
// quadrant KKT point; all candidates have closed forms, so no iteration is
// involved.  Satisfies ||x||_2 / (1+2 delta) <= ||x||_n <= ||x||_2 and, for
// x orthogonal to e_{2n} and e_{2n+1}, equals ||x||_2 exactly.
GaugeResult gauge_n(const NormFamilyParams& params, int n, const Vector& x);

// |x|_n = (1 - mu/n^2) ||x||_n + (mu/n^2) ||x||_2: the rotund member.
double norm_fine_n(const NormFamilyParams& params, int n, const Vector& x);

struct UnionNormResult {
  double value = 0.0;
  int argmin_n = 0;  // 0 marks the Euclidean tail (only when max_index == 0)
};

// min_n |x|_n over n = 1..M (plain ||x||_2 when M = 0).  Exact for vectors
// supported in the first 2M+1 coordinates: indices past M see such an x as
// orthogonal to their two special coordinates, where |x|_n = ||x||_2, and
// every |x|_n <= ||x||_2.
UnionNormResult norm_union(const NormFamilyParams& params, const Vector& x);

// Max of ||x - z_{i,n}||_n over sampled points of the slice
//   S = { y : |y|_n <= (n^2 + mu)/n^2,  f_{i,n}(y) >= 1 + delta^2/(2 n^2) }.
// Stays within 33 mu / delta^2 because the fine norm pins the slice to a
// thin cap around z_{i,n}.
double check_slice_lemma(const NormFamilyParams& params, int n, int i,
                         int sample_budget, std::uint64_t seed);

// Min of ||x - y||_2 over sampled x in conv(P_n ∪ B) \ B and y in
// conv(P_m ∪ B) \ B, n != m; bounded below by 1 - 10 delta.
double check_separation(const NormFamilyParams& params, int n, int m,
                        int sample_budget, std::uint64_t seed);

// Sampled sup of f_{i,n} over conv((P_n \ {z_{i,n}}) ∪ B); the claim bounds
// it strictly below 1 + delta^2/(4 n^2).  The analytic sup over the ball
// alone is sqrt(1 + delta^2/(4 n^2)).
double check_claim_sup(const NormFamilyParams& params, int n, int i,
                       int sample_budget, std::uint64_t seed);
double claim_ball_sup(const NormFamilyParams& params, int n);

}  // namespace holonet
