#include "holonet/nets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace holonet {

PointGrid::PointGrid(const Matrix& points, double cell)
    : cell_(cell), dim_(static_cast<int>(points.rows())) {
  if (!(cell > 0.0)) throw std::invalid_argument("PointGrid: cell must be positive");
  const int n = static_cast<int>(points.cols());
  if (n == 0) return;

  base_.resize(dim_);
  extent_.resize(dim_);
  std::vector<long long> coords(static_cast<std::size_t>(dim_));
  std::vector<std::pair<std::uint64_t, int>> tagged;
  tagged.reserve(static_cast<std::size_t>(n));

  for (int d = 0; d < dim_; ++d) {
    long long lo = std::numeric_limits<long long>::max();
    long long hi = std::numeric_limits<long long>::min();
    for (int j = 0; j < n; ++j) {
      const auto c = static_cast<long long>(std::floor(points(d, j) / cell_));
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    base_[d] = lo;
    extent_[d] = hi - lo + 1;
  }
  long double capacity = 1.0L;
  for (int d = 0; d < dim_; ++d) capacity *= static_cast<long double>(extent_[d]);
  if (capacity > 9.0e18L)
    throw std::length_error("PointGrid: cell index space overflows");

  for (int j = 0; j < n; ++j) {
    for (int d = 0; d < dim_; ++d)
      coords[static_cast<std::size_t>(d)] =
          static_cast<long long>(std::floor(points(d, j) / cell_));
    tagged.emplace_back(key_of(coords.data()), j);
  }
  std::sort(tagged.begin(), tagged.end());

  order_.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    if (i == 0 || tagged[i].first != tagged[i - 1].first) {
      keys_.push_back(tagged[i].first);
      offsets_.push_back(static_cast<int>(i));
    }
    order_.push_back(tagged[i].second);
  }
  offsets_.push_back(n);
}

std::uint64_t PointGrid::key_of(const long long* cell_coords) const {
  std::uint64_t key = 0;
  for (int d = 0; d < dim_; ++d)
    key = key * static_cast<std::uint64_t>(extent_[d]) +
          static_cast<std::uint64_t>(cell_coords[d] - base_[d]);
  return key;
}

const int* PointGrid::bucket(std::uint64_t key, int* count) const {
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) {
    *count = 0;
    return nullptr;
  }
  const auto pos = static_cast<std::size_t>(it - keys_.begin());
  *count = offsets_[pos + 1] - offsets_[pos];
  return order_.data() + offsets_[pos];
}

template <typename Fn>
void PointGrid::for_each_in_shell(const Eigen::Ref<const Vector>& target, int shell,
                                  Fn&& fn) const {
  if (dim_ == 0) {
    if (shell == 0) {
      int count = 0;
      const int* ids = bucket(0, &count);
      if (count > 0) fn(ids, count);
    }
    return;
  }
  std::vector<long long> tc(static_cast<std::size_t>(dim_));
  std::vector<long long> delta(static_cast<std::size_t>(dim_), -shell);
  std::vector<long long> coords(static_cast<std::size_t>(dim_));
  for (int d = 0; d < dim_; ++d)
    tc[static_cast<std::size_t>(d)] =
        static_cast<long long>(std::floor(target[d] / cell_));
  while (true) {
    long long cheb = 0;
    bool in_range = true;
    for (int d = 0; d < dim_; ++d) {
      cheb = std::max(cheb, std::llabs(delta[static_cast<std::size_t>(d)]));
      const long long c = tc[static_cast<std::size_t>(d)] + delta[static_cast<std::size_t>(d)];
      coords[static_cast<std::size_t>(d)] = c;
      if (c < base_[d] || c >= base_[d] + extent_[d]) in_range = false;
    }
    if (cheb == shell && in_range) {
      int count = 0;
      const int* ids = bucket(key_of(coords.data()), &count);
      if (count > 0) fn(ids, count);
    }
    int ax = dim_ - 1;
    while (ax >= 0) {
      if (++delta[static_cast<std::size_t>(ax)] <= shell) break;
      delta[static_cast<std::size_t>(ax)] = -shell;
      --ax;
    }
    if (ax < 0) break;
  }
}

int PointGrid::nearest(const Matrix& points, const Eigen::Ref<const Vector>& target,
                       double* dist2_out) const {
  if (keys_.empty()) {
    if (dist2_out) *dist2_out = std::numeric_limits<double>::infinity();
    return -1;
  }
  int best = -1;
  double best2 = std::numeric_limits<double>::infinity();
  long long max_shell = 0;
  for (int d = 0; d < dim_; ++d) {
    const auto tc = static_cast<long long>(std::floor(target[d] / cell_));
    max_shell = std::max(max_shell, std::llabs(tc - base_[d]));
    max_shell = std::max(max_shell, std::llabs(base_[d] + extent_[d] - 1 - tc));
  }
  for (long long s = 0; s <= max_shell; ++s) {
    // Ring s holds nothing closer than (s-1) cells; one extra ring is scanned
    // so exact ties resolve toward the lowest index regardless of bucketing.
    if (best >= 0 && static_cast<double>(s - 2) * cell_ >= std::sqrt(best2)) break;
    for_each_in_shell(target, static_cast<int>(s), [&](const int* ids, int count) {
      for (int i = 0; i < count; ++i) {
        const int j = ids[i];
        const double d2 = (target - points.col(j)).squaredNorm();
        if (d2 < best2 || (d2 == best2 && j < best)) {
          best2 = d2;
          best = j;
        }
      }
    });
  }
  if (dist2_out) *dist2_out = best2;
  return best;
}

std::vector<int> PointGrid::within(const Matrix& points,
                                   const Eigen::Ref<const Vector>& target,
                                   double radius) const {
  std::vector<int> out;
  if (keys_.empty() || radius < 0.0) return out;
  const double r2 = radius * radius;
  if (dim_ == 0) {
    int count = 0;
    const int* ids = bucket(0, &count);
    out.assign(ids, ids + count);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<long long> lo(static_cast<std::size_t>(dim_));
  std::vector<long long> hi(static_cast<std::size_t>(dim_));
  std::vector<long long> coords(static_cast<std::size_t>(dim_));
  for (int d = 0; d < dim_; ++d) {
    lo[static_cast<std::size_t>(d)] = std::max<long long>(
        base_[d], static_cast<long long>(std::floor((target[d] - radius) / cell_)));
    hi[static_cast<std::size_t>(d)] = std::min<long long>(
        base_[d] + extent_[d] - 1,
        static_cast<long long>(std::floor((target[d] + radius) / cell_)));
    if (lo[static_cast<std::size_t>(d)] > hi[static_cast<std::size_t>(d)]) return out;
  }
  coords = lo;
  while (true) {
    int count = 0;
    const int* ids = bucket(key_of(coords.data()), &count);
    for (int i = 0; i < count; ++i) {
      const int j = ids[i];
      if ((target - points.col(j)).squaredNorm() <= r2) out.push_back(j);
    }
    int ax = dim_ - 1;
    while (ax >= 0) {
      if (++coords[static_cast<std::size_t>(ax)] <= hi[static_cast<std::size_t>(ax)]) break;
      coords[static_cast<std::size_t>(ax)] = lo[static_cast<std::size_t>(ax)];
      --ax;
    }
    if (ax < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Vector NetLevel::point_embedded(int j, int ambient_dim) const {
  Vector x = Vector::Zero(ambient_dim);
  x.head(points.rows()) = points.col(j);
  return x;
}

namespace {

// Per-axis candidate values: the zero-anchored lattice of step h restricted
// to [-c, c], with the endpoints included.  Ascending.
std::vector<double> axis_candidates(double c, double h) {
  if (c == 0.0) return {0.0};
  const auto J = static_cast<long long>(std::floor(c / h));
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(2 * J + 3));
  const double top = static_cast<double>(J) * h;
  if (top < c) v.push_back(-c);
  for (long long j = -J; j <= J; ++j) v.push_back(static_cast<double>(j) * h);
  if (top < c) v.push_back(c);
  return v;
}

class GreedySweep {
 public:
  GreedySweep(int m, double eps, const std::vector<std::vector<double>>& axes)
      : m_(m), eps2_(eps * eps) {
    if (m_ < 2) return;
    cell_ = eps / std::sqrt(static_cast<double>(m_)) * (1.0 - 1e-9);
    reach_ = static_cast<long long>(eps / cell_ + 1.0 + 1e-9);
    sizes_.resize(static_cast<std::size_t>(m_));
    long double cells = 1.0L;
    for (int d = 0; d < m_; ++d) {
      const double c = std::abs(axes[static_cast<std::size_t>(d)].front());
      sizes_[static_cast<std::size_t>(d)] =
          static_cast<long long>(std::floor(2.0 * c / cell_)) + 2;
      cells *= static_cast<long double>(sizes_[static_cast<std::size_t>(d)]);
    }
    if (m_ == 2) {
      if (cells > 1.5e8L) throw std::length_error("greedy_net_points: occupancy grid too large");
      dense_.assign(static_cast<std::size_t>(sizes_[0] * sizes_[1]), -1);
    } else {
      if (cells > 9.0e18L) throw std::length_error("greedy_net_points: occupancy grid too large");
    }
    offsets_.resize(static_cast<std::size_t>(m_));
    for (int d = 0; d < m_; ++d)
      offsets_[static_cast<std::size_t>(d)] = std::abs(axes[static_cast<std::size_t>(d)].front());
  }

  // True iff v is >= eps from every kept point; if so, records v.
  bool try_keep(const double* v) {
    if (m_ == 0) return kept_.empty();
    if (m_ == 1) {
      if (!kept_.empty() && (v[0] - kept_.back()) * (v[0] - kept_.back()) < eps2_)
        return false;
      kept_.push_back(v[0]);
      return true;
    }
    std::vector<long long> c(static_cast<std::size_t>(m_));
    for (int d = 0; d < m_; ++d)
      c[static_cast<std::size_t>(d)] = static_cast<long long>(
          std::floor((v[d] + offsets_[static_cast<std::size_t>(d)]) / cell_));
    std::vector<long long> nb(static_cast<std::size_t>(m_), -reach_);
    while (true) {
      long long flat = 0;
      bool in_range = true;
      for (int d = 0; d < m_; ++d) {
        const long long cd = c[static_cast<std::size_t>(d)] + nb[static_cast<std::size_t>(d)];
        if (cd < 0 || cd >= sizes_[static_cast<std::size_t>(d)]) {
          in_range = false;
          break;
        }
        flat = flat * sizes_[static_cast<std::size_t>(d)] + cd;
      }
      if (in_range) {
        const int occ = occupant(flat);
        if (occ >= 0) {
          double d2 = 0.0;
          for (int d = 0; d < m_; ++d) {
            const double diff = v[d] - kept_[static_cast<std::size_t>(occ) *
                                                  static_cast<std::size_t>(m_) +
                                              static_cast<std::size_t>(d)];
            d2 += diff * diff;
          }
          if (d2 < eps2_) return false;
        }
      }
      int ax = m_ - 1;
      while (ax >= 0) {
        if (++nb[static_cast<std::size_t>(ax)] <= reach_) break;
        nb[static_cast<std::size_t>(ax)] = -reach_;
        --ax;
      }
      if (ax < 0) break;
    }
    const int idx = static_cast<int>(kept_.size() / static_cast<std::size_t>(m_));
    for (int d = 0; d < m_; ++d) kept_.push_back(v[d]);
    long long flat = 0;
    for (int d = 0; d < m_; ++d)
      flat = flat * sizes_[static_cast<std::size_t>(d)] + c[static_cast<std::size_t>(d)];
    store(flat, idx);
    return true;
  }

  Matrix points() const {
    if (m_ == 0) return Matrix::Zero(0, 1);
    const auto count = static_cast<Index>(m_ == 1 ? kept_.size()
                                                  : kept_.size() / static_cast<std::size_t>(m_));
    Matrix P(m_, count);
    for (Index j = 0; j < count; ++j)
      for (int d = 0; d < m_; ++d)
        P(d, j) = kept_[static_cast<std::size_t>(j) * static_cast<std::size_t>(m_) +
                        static_cast<std::size_t>(d)];
    return P;
  }

 private:
  int occupant(long long flat) const {
    if (!dense_.empty()) return dense_[static_cast<std::size_t>(flat)];
    const auto it = sparse_.find(flat);
    return it == sparse_.end() ? -1 : it->second;
  }
  void store(long long flat, int idx) {
    if (m_ == 1) return;
    if (!dense_.empty())
      dense_[static_cast<std::size_t>(flat)] = idx;
    else
      sparse_[flat] = idx;
  }

  int m_;
  double eps2_;
  double cell_ = 1.0;
  long long reach_ = 0;
  std::vector<long long> sizes_;
  std::vector<double> offsets_;
  std::vector<double> kept_;  // m_ doubles per kept point (flat layout)
  std::vector<int> dense_;
  std::unordered_map<long long, int> sparse_;
};

}  // namespace

Matrix greedy_net_points(const FlatSetDescriptor& K, int m, double eps) {
  if (m < 0 || m > K.ambient_dim())
    throw std::invalid_argument("greedy_net_points: section dimension out of range");
  if (!(eps > 0.0)) throw std::invalid_argument("greedy_net_points: eps must be positive");
  if (m == 0) return Matrix::Zero(0, 1);

  const FlatSetDescriptor sec = section(K, m);
  const double h = eps / (2.0 * std::sqrt(static_cast<double>(m)));
  long double total = 1.0L;
  for (int d = 0; d < m; ++d) {
    const double c = sec.coeffs()[d];
    total *= c == 0.0 ? 1.0L : 2.0L * std::floor(static_cast<long double>(c) / h) + 3.0L;
  }
  if (total > 1.2e8L)
    throw std::length_error("greedy_net_points: candidate lattice too large");
  std::vector<std::vector<double>> axes;
  axes.reserve(static_cast<std::size_t>(m));
  for (int d = 0; d < m; ++d) axes.push_back(axis_candidates(sec.coeffs()[d], h));

  const bool cross = K.shape() == SetShape::CrossPolytope;
  GreedySweep sweep(m, eps, axes);
  std::vector<std::size_t> pos(static_cast<std::size_t>(m), 0);
  std::vector<double> v(static_cast<std::size_t>(m));
  for (int d = 0; d < m; ++d) v[static_cast<std::size_t>(d)] = axes[static_cast<std::size_t>(d)][0];
  while (true) {
    bool member = true;
    if (cross) {
      double s = 0.0;
      for (int d = 0; d < m; ++d)
        if (sec.coeffs()[d] > 0.0)
          s += std::abs(v[static_cast<std::size_t>(d)]) / sec.coeffs()[d];
      member = s <= 1.0;
    }
    if (member) sweep.try_keep(v.data());
    int ax = m - 1;
    while (ax >= 0) {
      auto& p = pos[static_cast<std::size_t>(ax)];
      if (++p < axes[static_cast<std::size_t>(ax)].size()) {
        v[static_cast<std::size_t>(ax)] = axes[static_cast<std::size_t>(ax)][p];
        break;
      }
      p = 0;
      v[static_cast<std::size_t>(ax)] = axes[static_cast<std::size_t>(ax)][0];
      --ax;
    }
    if (ax < 0) break;
  }
  return sweep.points();
}

NetLevel build_net(const FlatSetDescriptor& K, int k) {
  NetLevel lvl;
  lvl.level = k;
  lvl.eps = std::ldexp(1.0, -k);
  lvl.section_dim = n_of_eps(K.profile(), lvl.eps);
  if (lvl.section_dim > K.ambient_dim())
    throw std::invalid_argument(
        "build_net: level requires a section beyond the ambient dimension");
  lvl.points = greedy_net_points(K, lvl.section_dim, lvl.eps);
  lvl.separation = lvl.eps;
  lvl.density = 1.5 * lvl.eps;
  lvl.grid = PointGrid(lvl.points, 2.0 * lvl.eps);
  return lvl;
}

NetCheck verify_net(const FlatSetDescriptor& K, const NetLevel& level, int sample_budget,
                    std::uint64_t seed) {
  NetCheck check;
  const Matrix& P = level.points;
  const int n = level.count();

  check.min_pair_distance = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    for (int i : level.grid.within(P, P.col(j), level.separation * (1.0 + 1e-9))) {
      if (i == j) continue;
      check.min_pair_distance =
          std::min(check.min_pair_distance, (P.col(i) - P.col(j)).norm());
    }
  }
  check.separation_ok = check.min_pair_distance >= level.separation * (1.0 - 1e-12);

  const int m = level.section_dim;
  const FlatSetDescriptor sec = section(K, m);
  std::vector<Vector> samples;
  if (sec.shape() == SetShape::Box) {
    samples.emplace_back(sec.coeffs());
  } else {
    for (Index d = 0; d < sec.coeffs().size(); ++d) {
      if (sec.coeffs()[d] == 0.0) continue;
      Vector e = Vector::Zero(sec.coeffs().size());
      e[d] = sec.coeffs()[d];
      samples.push_back(std::move(e));
    }
  }
  Rng rng(seed);
  for (int i = 0; i < sample_budget; ++i) samples.push_back(sample_point(sec, rng));

  check.max_sample_distance = 0.0;
  for (const Vector& s : samples) {
    double d2 = 0.0;
    level.grid.nearest(P, s.head(m), &d2);
    check.max_sample_distance = std::max(check.max_sample_distance, std::sqrt(d2));
  }
  check.density_ok = check.max_sample_distance <= level.density * (1.0 + 1e-9);
  return check;
}

NetCache::NetCache(FlatSetDescriptor K) : K_(std::move(K)) {}

const NetLevel& NetCache::level(int k) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = levels_.find(k);
    if (it != levels_.end()) return *it->second;
  }
  auto built = std::make_shared<const NetLevel>(build_net(K_, k));
  std::lock_guard<std::mutex> lock(mutex_);
  const auto [it, inserted] = levels_.emplace(k, std::move(built));
  return *it->second;
}

}  // namespace holonet
