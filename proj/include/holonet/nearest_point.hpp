#pragma once

#include <vector>

#include "holonet/gauge_norms.hpp"

namespace holonet {

// Target set of the nearest-point experiment after alignment:
// K = [-half_width, half_width] e_1.  Its span is 1-dimensional, so gauge
// indices n >= 2 are unconstrained by K.
struct SegmentK {
  double half_width = 0.0;
  int support_bound = 1;  // N: K lies in the span of the first N coordinates
};

struct Alignment {
  SegmentK segment;
  Matrix rotation;     // orthonormal, D x D; T(x) = rotation^T (x - translation)
  Vector translation;  // midpoint of the extreme pair
};

// Aligns the convex hull of finitely many collinear points onto a symmetric
// segment along e_1: picks the farthest pair, translates its midpoint to the
// origin, maps its direction to e_1 by a Householder reflection.  Throws
// std::invalid_argument when the points are not collinear within 1e-10 or the
// diameter vanishes.
Alignment align_K(const std::vector<Vector>& points);

Vector apply_alignment(const Alignment& a, const Vector& x);

struct NpmCandidate {
  int norm_index = 0;  // 0 = Euclidean tail
  double t = 0.0;
  double value = 0.0;
};

struct NpmResult {
  Vector point;        // t* e_1
  double distance = 0.0;
  int norm_index = 0;  // n attaining the union norm (0 = Euclidean tail)
  double t = 0.0;
  std::vector<NpmCandidate> near_ties;  // candidates within 1e-8 of the best
};

// Nearest point of K in the union norm: minimizes |x - t e_1|_n over
// t in [-a, a] by golden-section (each per-n objective is convex in t) and
// over n in {1..M} plus the Euclidean tail.  Ties within 1e-8 are reported.
NpmResult npm(const NormFamilyParams& params, const SegmentK& K, const Vector& x);

// Plain Hilbert-space nearest point (clamp of the e_1 coordinate); the
// uniformly continuous contrast.
NpmResult npm_euclidean(const SegmentK& K, const Vector& x);

struct DivergenceRow {
  int n = 0;
  double input_gap = 0.0;          // || eps x_{1,n} - eps x_{2,n} ||
  double output_gap = 0.0;         // || R(eps x_{1,n}) - R(eps x_{2,n}) ||
  double lower_bound = 0.0;        // eps delta / (1 + delta)
  double upper_bound_input = 0.0;  // 2 eps delta / n
  double t1 = 0.0, t2 = 0.0;       // minimizing parameters
  double goal_dev1 = 0.0;          // || R(eps x_{i,n}) + (-1)^i eps delta e_1 ||
  double goal_dev2 = 0.0;
};

// The divergence experiment: for each n in [n_lo, n_hi], feeds the pair
// eps x_{1,n}, eps x_{2,n} to the nearest-point map and records input and
// output gaps in the union norm.  Inputs shrink like 2 eps delta / n while
// outputs stay above eps delta / (1 + delta): the map is not uniformly
// continuous.  `euclidean` switches to the Hilbert nearest point, where the
// output gaps collapse to 0 instead.
std::vector<DivergenceRow> divergence_experiment(const NormFamilyParams& params,
                                                 const SegmentK& K, double eps,
                                                 int n_lo, int n_hi,
                                                 bool euclidean = false);

}  // namespace holonet
