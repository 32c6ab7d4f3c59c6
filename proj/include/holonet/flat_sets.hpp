#pragma once

#include <cstdint>
#include <vector>

#include "holonet/rng.hpp"
#include "holonet/types.hpp"

namespace holonet {

// Flatness profile (r_n): a non-increasing null sequence bounding the height
// of K over its n-dimensional coordinate sections.  Two kinds:
//
//  * holder(alpha): r_n = 20^{n/(alpha-1)} with alpha in (0,1).  This is the
//    profile that makes the retraction alpha-Holder; r_0 = 1 and the ratio
//    between consecutive values is the constant 20^{1/(alpha-1)} < 1.
//  * explicit_values(list): arbitrary non-increasing list of values >= 0.
//    Zero entries are allowed and mean the set already lies inside that
//    coordinate section.
class FlatnessProfile {
 public:
  static FlatnessProfile holder(double alpha);
  static FlatnessProfile explicit_values(std::vector<double> values);

  bool is_holder() const { return is_holder_; }
  double alpha() const;                      // holder profiles only
  const std::vector<double>& values() const; // explicit profiles only
  int stored_size() const;                   // explicit profiles only

 private:
  FlatnessProfile() = default;
  bool is_holder_ = false;
  double alpha_ = 0.0;
  std::vector<double> values_;
};

// r_n.  Explicit profiles throw std::out_of_range past their stored range.
double r_value(const FlatnessProfile& profile, int n);

// n(eps) = min { n >= 0 : r_n <= eps }.  Total: for explicit profiles the
// sequence past the stored range is treated as 0 (the associated set lies in
// the stored-range section), so the answer is at most stored_size().
int n_of_eps(const FlatnessProfile& profile, double eps);

enum class SetShape { Box, CrossPolytope };

struct Projection {
  Vector point;     // exact Euclidean nearest point, in K
  double distance;  // ||x - point||_2
};

struct HeightEstimate {
  int n = 0;
  double lower_bound = 0.0;  // certified: every sample lies in K
  int budget = 0;
  std::uint64_t seed = 0;
};

// Axis-aligned compact convex set in R^D whose section heights realize a
// given flatness profile:
//
//  * Box:           |x_k| <= c_k with c_k = 2^{-k} r_{k-1}
//  * CrossPolytope: sum_k |x_k|/c_k <= 1 with c_k = r_{k-1}
//
// (k = 1..D).  A zero coefficient pins that coordinate to 0.  Both shapes
// admit exact Euclidean projections: per-coordinate clamping for the box and
// a sorting-based thresholding step for the weighted l1 ball.
class FlatSetDescriptor {
 public:
  FlatSetDescriptor(SetShape shape, FlatnessProfile profile, int ambient_dim);

  SetShape shape() const { return shape_; }
  int ambient_dim() const { return static_cast<int>(coeffs_.size()); }
  const Vector& coeffs() const { return coeffs_; }
  const FlatnessProfile& profile() const { return profile_; }
  // Number of leading coordinates that may be nonzero (shrinks for sections).
  int section_dim() const { return section_dim_; }

  bool contains(const Vector& x) const;

 private:
  SetShape shape_;
  FlatnessProfile profile_;
  Vector coeffs_;
  int section_dim_;

  friend FlatSetDescriptor section(const FlatSetDescriptor&, int);
};

// Exact Euclidean nearest point of K; idempotent, result passes contains().
Projection project_onto(const FlatSetDescriptor& K, const Vector& x);
double distance_to(const FlatSetDescriptor& K, const Vector& x);

// K ∩ E_m: same shape, coefficients past the first m zeroed.  m = 0 yields
// the singleton {0}.  Throws std::out_of_range unless 0 <= m <= D.
FlatSetDescriptor section(const FlatSetDescriptor& K, int m);

// Random point of K (used by height estimation and the experiments).  Boxes
// sample coordinates uniformly; cross-polytopes push a uniform weighted-l1
// ball sample through the coefficients.
Vector sample_point(const FlatSetDescriptor& K, Rng& rng);

// Random point at exact Euclidean distance `target` from K: a box sample is
// pushed out along the normal ray through its projection, which leaves the
// projection (and hence the distance) unchanged for convex K.  Throws after
// 256 attempts if the sampling box never leaves the set.
Vector sample_at_distance(const FlatSetDescriptor& K, double target,
                          double box_halfwidth, Rng& rng);

// Monte Carlo lower bound for h_n = sup_{x in K} d(x, K ∩ E_n), with the
// extreme points (cross-polytope vertices / deep box corner) added to the
// sample set so the bound is tight where the sup is attained.
HeightEstimate estimate_height(const FlatSetDescriptor& K, int n, int budget,
                               std::uint64_t seed);

// Shared-sample variant for n = 0..D; monotone non-increasing by
// construction since every n sees the same samples.
std::vector<HeightEstimate> estimate_heights(const FlatSetDescriptor& K, int budget,
                                             std::uint64_t seed);

// Exact Euclidean projection onto { y : sum_k |y_k| / c_k <= 1 } by sorted
// thresholding.  Coordinates with c_k = 0 are pinned to zero.  Exposed for
// direct testing against the hull oracle.
Vector project_weighted_l1(const Vector& x, const Vector& c);

// Hull vertices of K as columns (2^m corners for a box section, 2m vertices
// for a cross-polytope section); ambient dimension rows.  Intended for the
// oracle cross-checks in low dimension; throws if the box section exceeds 20
// potentially-nonzero coordinates.
Matrix hull_vertices(const FlatSetDescriptor& K);

}  // namespace holonet
