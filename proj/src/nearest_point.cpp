#include "holonet/nearest_point.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace holonet {

Alignment align_K(const std::vector<Vector>& points) {
  if (points.empty()) throw std::invalid_argument("align_K: no points");
  const Index dim = points[0].size();
  for (const Vector& p : points)
    if (p.size() != dim) throw std::invalid_argument("align_K: mixed dimensions");

  std::size_t ia = 0, ib = 0;
  double diameter = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double d = (points[i] - points[j]).norm();
      if (d > diameter) {
        diameter = d;
        ia = i;
        ib = j;
      }
    }
  }
  if (diameter <= 1e-14) throw std::invalid_argument("align_K: zero diameter");

  Alignment a;
  a.translation = 0.5 * (points[ia] + points[ib]);
  const Vector u = (points[ib] - points[ia]) / diameter;
  for (const Vector& p : points) {
    const Vector c = p - a.translation;
    if ((c - c.dot(u) * u).norm() > 1e-10 * (1.0 + diameter))
      throw std::invalid_argument("align_K: points are not collinear");
  }

  // Householder reflection with Q e_1 = u (orthogonal, symmetric).
  Vector v = u;
  v[0] -= 1.0;
  const double v2 = v.squaredNorm();
  a.rotation = Matrix::Identity(dim, dim);
  if (v2 > 1e-30) a.rotation -= (2.0 / v2) * v * v.transpose();

  a.segment.half_width = 0.5 * diameter;
  a.segment.support_bound = 1;
  return a;
}

Vector apply_alignment(const Alignment& a, const Vector& x) {
  return a.rotation.transpose() * (x - a.translation);
}

namespace {

template <typename F>
double golden_min(const F& f, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 90 && b - a > 1e-15 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

}  // namespace

NpmResult npm(const NormFamilyParams& params, const SegmentK& K, const Vector& x) {
  if (x.size() != params.ambient_dim)
    throw std::invalid_argument("npm: dimension mismatch");
  if (!(K.half_width >= 0.0)) throw std::invalid_argument("npm: negative half width");
  const double a = K.half_width;

  // min_y min_n |x - y|_n = min_n min_y: each inner problem is convex in t.
  std::vector<NpmCandidate> candidates;
  {
    NpmCandidate tail;
    tail.norm_index = 0;
    tail.t = std::clamp(x[0], -a, a);
    Vector r = x;
    r[0] -= tail.t;
    tail.value = r.norm();
    candidates.push_back(tail);
  }
  Vector probe = x;
  for (int n = 1; n <= params.max_index; ++n) {
    const auto objective = [&](double t) {
      probe[0] = x[0] - t;
      return norm_fine_n(params, n, probe);
    };
    NpmCandidate cand;
    cand.norm_index = n;
    cand.t = a == 0.0 ? 0.0 : golden_min(objective, -a, a);
    // The interval endpoints are not golden-section iterates; cover them.
    for (const double t : {-a, a})
      if (objective(t) < objective(cand.t)) cand.t = t;
    cand.value = objective(cand.t);
    candidates.push_back(cand);
  }

  const NpmCandidate* best = &candidates[0];
  for (const NpmCandidate& c : candidates)
    if (c.value < best->value) best = &c;

  NpmResult result;
  result.point = Vector::Zero(x.size());
  result.point[0] = best->t;
  result.distance = best->value;
  result.norm_index = best->norm_index;
  result.t = best->t;
  for (const NpmCandidate& c : candidates)
    if (c.value - best->value <= 1e-8) result.near_ties.push_back(c);
  return result;
}

NpmResult npm_euclidean(const SegmentK& K, const Vector& x) {
  if (!(K.half_width >= 0.0))
    throw std::invalid_argument("npm_euclidean: negative half width");
  NpmResult result;
  result.t = std::clamp(x[0], -K.half_width, K.half_width);
  result.point = Vector::Zero(x.size());
  result.point[0] = result.t;
  Vector r = x;
  r[0] -= result.t;
  result.distance = r.norm();
  result.norm_index = 0;
  return result;
}

std::vector<DivergenceRow> divergence_experiment(const NormFamilyParams& params,
                                                 const SegmentK& K, double eps,
                                                 int n_lo, int n_hi, bool euclidean) {
  if (n_lo < 1 || n_hi < n_lo)
    throw std::invalid_argument("divergence_experiment: bad index range");
  if (2 * n_hi + 1 > params.ambient_dim)
    throw std::invalid_argument("divergence_experiment: index range exceeds dimension");
  if (!(eps > 0.0)) throw std::invalid_argument("divergence_experiment: eps must be positive");

  std::vector<DivergenceRow> rows;
  rows.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (int n = n_lo; n <= n_hi; ++n) {
    const SpecialVectors sv = special_vectors(params, n);
    const Vector p1 = eps * sv.x1;
    const Vector p2 = eps * sv.x2;
    const NpmResult r1 = euclidean ? npm_euclidean(K, p1) : npm(params, K, p1);
    const NpmResult r2 = euclidean ? npm_euclidean(K, p2) : npm(params, K, p2);

    DivergenceRow row;
    row.n = n;
    row.input_gap =
        euclidean ? (p1 - p2).norm() : norm_union(params, p1 - p2).value;
    row.output_gap = (r1.point - r2.point).norm();
    row.lower_bound = eps * params.delta / (1.0 + params.delta);
    row.upper_bound_input = 2.0 * eps * params.delta / static_cast<double>(n);
    row.t1 = r1.t;
    row.t2 = r2.t;
    Vector goal1 = r1.point;
    goal1[0] -= eps * params.delta;
    Vector goal2 = r2.point;
    goal2[0] += eps * params.delta;
    row.goal_dev1 = goal1.norm();
    row.goal_dev2 = goal2.norm();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace holonet
