#include "holonet/flat_sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace holonet {

FlatnessProfile FlatnessProfile::holder(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("FlatnessProfile: alpha must lie in (0, 1)");
  FlatnessProfile p;
  p.is_holder_ = true;
  p.alpha_ = alpha;
  return p;
}

FlatnessProfile FlatnessProfile::explicit_values(std::vector<double> values) {
  if (values.empty())
    throw std::invalid_argument("FlatnessProfile: empty value list");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0.0)
      throw std::invalid_argument("FlatnessProfile: negative value");
    if (i > 0 && values[i] > values[i - 1])
      throw std::invalid_argument("FlatnessProfile: values must be non-increasing");
  }
  FlatnessProfile p;
  p.values_ = std::move(values);
  return p;
}

double FlatnessProfile::alpha() const {
  if (!is_holder_) throw std::logic_error("FlatnessProfile: not a holder profile");
  return alpha_;
}

const std::vector<double>& FlatnessProfile::values() const {
  if (is_holder_) throw std::logic_error("FlatnessProfile: not an explicit profile");
  return values_;
}

int FlatnessProfile::stored_size() const {
  if (is_holder_) throw std::logic_error("FlatnessProfile: not an explicit profile");
  return static_cast<int>(values_.size());
}

double r_value(const FlatnessProfile& profile, int n) {
  if (n < 0) throw std::out_of_range("r_value: negative index");
  if (profile.is_holder())
    return std::pow(20.0, static_cast<double>(n) / (profile.alpha() - 1.0));
  const auto& v = profile.values();
  if (n >= static_cast<int>(v.size()))
    throw std::out_of_range("r_value: index beyond stored range");
  return v[static_cast<std::size_t>(n)];
}

int n_of_eps(const FlatnessProfile& profile, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("n_of_eps: eps must be positive");
  if (profile.is_holder()) {
    // r_n <= eps iff n >= (alpha-1) log_20 eps; scan from the closed-form
    // floor so boundary cases agree exactly with r_value.
    const double guess = (profile.alpha() - 1.0) * std::log(eps) / std::log(20.0);
    int n = std::max(0, static_cast<int>(std::floor(guess)) - 2);
    while (r_value(profile, n) > eps) ++n;
    return n;
  }
  const auto& v = profile.values();
  for (int n = 0; n < static_cast<int>(v.size()); ++n)
    if (v[static_cast<std::size_t>(n)] <= eps) return n;
  // Past the stored range the set lies inside the section, i.e. r = 0.
  return static_cast<int>(v.size());
}

namespace {

Vector make_coeffs(SetShape shape, const FlatnessProfile& profile, int dim) {
  if (dim < 1) throw std::invalid_argument("FlatSetDescriptor: dimension must be >= 1");
  Vector c(dim);
  for (int k = 1; k <= dim; ++k) {
    double r;
    if (!profile.is_holder() && k - 1 >= profile.stored_size())
      r = 0.0;
    else
      r = r_value(profile, k - 1);
    c[k - 1] = shape == SetShape::Box ? std::ldexp(r, -k) : r;
  }
  return c;
}

}  // namespace

FlatSetDescriptor::FlatSetDescriptor(SetShape shape, FlatnessProfile profile,
                                     int ambient_dim)
    : shape_(shape),
      profile_(std::move(profile)),
      coeffs_(make_coeffs(shape, profile_, ambient_dim)),
      section_dim_(ambient_dim) {}

bool FlatSetDescriptor::contains(const Vector& x) const {
  if (x.size() != coeffs_.size()) return false;
  if (shape_ == SetShape::Box) {
    for (Index k = 0; k < x.size(); ++k)
      if (std::abs(x[k]) > coeffs_[k]) return false;
    return true;
  }
  double total = 0.0;
  for (Index k = 0; k < x.size(); ++k) {
    if (coeffs_[k] == 0.0) {
      if (x[k] != 0.0) return false;
    } else {
      total += std::abs(x[k]) / coeffs_[k];
    }
  }
  return total <= 1.0;
}

Vector project_weighted_l1(const Vector& x, const Vector& c) {
  const Index dim = x.size();
  if (c.size() != dim)
    throw std::invalid_argument("project_weighted_l1: dimension mismatch");
  Vector y = Vector::Zero(dim);

  // Work on the open coordinates (c_k > 0) with magnitudes a_k = |x_k| and
  // weights w_k = 1/c_k; signs are restored at the end.
  std::vector<Index> open;
  double total = 0.0;
  for (Index k = 0; k < dim; ++k) {
    if (c[k] > 0.0) {
      open.push_back(k);
      total += std::abs(x[k]) / c[k];
    }
  }
  if (total <= 1.0) {
    for (Index k : open) y[k] = x[k];
    return y;
  }

  const auto n = static_cast<Index>(open.size());
  Vector a(n), w(n), ratio(n);
  for (Index i = 0; i < n; ++i) {
    a[i] = std::abs(x[open[static_cast<std::size_t>(i)]]);
    w[i] = 1.0 / c[open[static_cast<std::size_t>(i)]];
    ratio[i] = a[i] / w[i];
  }

  // KKT: y_k = max(a_k - theta w_k, 0) with theta > 0 solving
  // sum w_k y_k = 1.  The active set is a prefix in decreasing a_k / w_k
  // order, which the partial sums below locate exactly.
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(),
            [&](Index i, Index j) { return ratio[i] > ratio[j]; });

  double sum_wa = 0.0, sum_w2 = 0.0, theta = 0.0;
  for (Index pos = 0; pos < n; ++pos) {
    const Index i = order[static_cast<std::size_t>(pos)];
    sum_wa += w[i] * a[i];
    sum_w2 += w[i] * w[i];
    const double cand = (sum_wa - 1.0) / sum_w2;
    const double next = pos + 1 < n ? ratio[order[static_cast<std::size_t>(pos + 1)]] : 0.0;
    if (cand > 0.0 && cand >= next) {
      theta = cand;
      break;
    }
  }

  // Nudge theta upward by ulps until the constraint holds in floating point
  // as evaluated by contains(); keeps projection exactly idempotent.
  for (int guard = 0; guard < 64; ++guard) {
    double s = 0.0;
    for (Index i = 0; i < n; ++i) {
      const double yi = std::max(a[i] - theta * w[i], 0.0);
      s += yi * w[i];
    }
    if (s <= 1.0) break;
    theta = std::nextafter(theta * (1.0 + 4e-16), std::numeric_limits<double>::infinity());
  }

  for (Index i = 0; i < n; ++i) {
    const double yi = std::max(a[i] - theta * w[i], 0.0);
    y[open[static_cast<std::size_t>(i)]] =
        x[open[static_cast<std::size_t>(i)]] < 0.0 ? -yi : yi;
  }
  return y;
}

Projection project_onto(const FlatSetDescriptor& K, const Vector& x) {
  if (x.size() != K.coeffs().size())
    throw std::invalid_argument("project_onto: dimension mismatch");
  Projection result;
  if (K.shape() == SetShape::Box) {
    result.point = x.cwiseMin(K.coeffs()).cwiseMax(-K.coeffs());
  } else {
    result.point = project_weighted_l1(x, K.coeffs());
  }
  result.distance = (x - result.point).norm();
  return result;
}

double distance_to(const FlatSetDescriptor& K, const Vector& x) {
  return project_onto(K, x).distance;
}

FlatSetDescriptor section(const FlatSetDescriptor& K, int m) {
  if (m < 0 || m > K.ambient_dim())
    throw std::out_of_range("section: m outside [0, ambient_dim]");
  FlatSetDescriptor s = K;
  for (int k = m; k < K.ambient_dim(); ++k) s.coeffs_[k] = 0.0;
  s.section_dim_ = std::min(s.section_dim_, m);
  return s;
}

Vector sample_point(const FlatSetDescriptor& K, Rng& rng) {
  const int dim = K.ambient_dim();
  Vector x = Vector::Zero(dim);
  std::vector<Index> open;
  for (Index k = 0; k < dim; ++k)
    if (K.coeffs()[k] > 0.0) open.push_back(k);
  if (open.empty()) return x;

  if (K.shape() == SetShape::Box) {
    for (Index k : open) x[k] = K.coeffs()[k] * rng.uniform(-1.0, 1.0);
    return x;
  }
  Vector t = rng.simplex_point(static_cast<Index>(open.size()));
  const double radial =
      std::pow(rng.uniform01(), 1.0 / static_cast<double>(open.size()));
  for (std::size_t i = 0; i < open.size(); ++i) {
    const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
    x[open[i]] = K.coeffs()[open[i]] * t[static_cast<Index>(i)] * radial * sign;
  }
  return x;
}

Vector sample_at_distance(const FlatSetDescriptor& K, double target,
                          double box_halfwidth, Rng& rng) {
  if (!(target > 0.0))
    throw std::invalid_argument("sample_at_distance: target must be positive");
  const int dim = K.ambient_dim();
  for (int tries = 0; tries < 256; ++tries) {
    Vector raw(dim);
    for (int d = 0; d < dim; ++d) raw[d] = rng.uniform(-box_halfwidth, box_halfwidth);
    const Projection pr = project_onto(K, raw);
    if (pr.distance <= 1e-9) continue;
    return pr.point + (raw - pr.point) * (target / pr.distance);
  }
  throw std::runtime_error("sample_at_distance: sampling box never leaves the set");
}

namespace {

std::vector<Vector> extreme_samples(const FlatSetDescriptor& K) {
  std::vector<Vector> pts;
  const int dim = K.ambient_dim();
  if (K.shape() == SetShape::Box) {
    // The sup of d(., K ∩ E_n) over a box is attained at a deep corner.
    pts.emplace_back(K.coeffs());
  } else {
    for (Index k = 0; k < dim; ++k) {
      Vector v = Vector::Zero(dim);
      v[k] = K.coeffs()[k];
      pts.push_back(std::move(v));
    }
  }
  return pts;
}

}  // namespace

std::vector<HeightEstimate> estimate_heights(const FlatSetDescriptor& K, int budget,
                                             std::uint64_t seed) {
  if (budget < 0) throw std::invalid_argument("estimate_heights: negative budget");
  const int dim = K.ambient_dim();
  std::vector<Vector> samples = extreme_samples(K);
  Rng rng(seed);
  for (int i = 0; i < budget; ++i) samples.push_back(sample_point(K, rng));

  std::vector<HeightEstimate> rows;
  rows.reserve(static_cast<std::size_t>(dim) + 1);
  for (int n = 0; n <= dim; ++n) {
    const FlatSetDescriptor sec = section(K, n);
    HeightEstimate h;
    h.n = n;
    h.budget = budget;
    h.seed = seed;
    for (const Vector& s : samples)
      h.lower_bound = std::max(h.lower_bound, distance_to(sec, s));
    rows.push_back(h);
  }
  return rows;
}

HeightEstimate estimate_height(const FlatSetDescriptor& K, int n, int budget,
                               std::uint64_t seed) {
  if (n < 0) throw std::out_of_range("estimate_height: negative n");
  const int m = std::min(n, K.ambient_dim());
  const FlatSetDescriptor sec = section(K, m);
  std::vector<Vector> samples = extreme_samples(K);
  Rng rng(seed);
  for (int i = 0; i < budget; ++i) samples.push_back(sample_point(K, rng));
  HeightEstimate h;
  h.n = n;
  h.budget = budget;
  h.seed = seed;
  for (const Vector& s : samples)
    h.lower_bound = std::max(h.lower_bound, distance_to(sec, s));
  return h;
}

Matrix hull_vertices(const FlatSetDescriptor& K) {
  const int dim = K.ambient_dim();
  std::vector<Index> open;
  for (Index k = 0; k < dim; ++k)
    if (K.coeffs()[k] > 0.0) open.push_back(k);

  if (K.shape() == SetShape::CrossPolytope) {
    if (open.empty()) return Matrix::Zero(dim, 1);
    Matrix V = Matrix::Zero(dim, 2 * static_cast<Index>(open.size()));
    for (std::size_t i = 0; i < open.size(); ++i) {
      V(open[i], static_cast<Index>(2 * i)) = K.coeffs()[open[i]];
      V(open[i], static_cast<Index>(2 * i + 1)) = -K.coeffs()[open[i]];
    }
    return V;
  }
  if (open.size() > 20)
    throw std::invalid_argument("hull_vertices: box corner count too large");
  const Index count = Index{1} << open.size();
  Matrix V = Matrix::Zero(dim, count);
  for (Index mask = 0; mask < count; ++mask)
    for (std::size_t i = 0; i < open.size(); ++i)
      V(open[i], mask) =
          (mask >> i & 1) ? K.coeffs()[open[i]] : -K.coeffs()[open[i]];
  return V;
}

}  // namespace holonet
