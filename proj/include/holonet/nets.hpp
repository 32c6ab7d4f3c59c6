#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "holonet/flat_sets.hpp"
#include "holonet/types.hpp"

namespace holonet {

// Static bucket grid over the first `dim` coordinates, used for nearest and
// range queries against a fixed point cloud.  Points are stored in CSR-style
// buckets keyed by integer cell coordinates.
class PointGrid {
 public:
  PointGrid() = default;
  PointGrid(const Matrix& points, double cell);

  // Index of the nearest column of `points` to target (section coordinates),
  // breaking exact ties toward the lower index.  dist2_out receives the
  // squared distance.
  int nearest(const Matrix& points, const Eigen::Ref<const Vector>& target,
              double* dist2_out) const;

  // Indices of all columns within `radius` of target, ascending.
  std::vector<int> within(const Matrix& points, const Eigen::Ref<const Vector>& target,
                          double radius) const;

  bool empty() const { return keys_.empty(); }

 private:
  double cell_ = 1.0;
  int dim_ = 0;
  std::vector<std::uint64_t> keys_;    // sorted unique bucket keys
  std::vector<int> offsets_;           // CSR offsets into order_
  std::vector<int> order_;             // point indices grouped by bucket
  Eigen::Array<long long, Eigen::Dynamic, 1> base_;
  Eigen::Array<long long, Eigen::Dynamic, 1> extent_;

  std::uint64_t key_of(const long long* cell_coords) const;
  const int* bucket(std::uint64_t key, int* count) const;
  template <typename Fn>
  void for_each_in_shell(const Eigen::Ref<const Vector>& target, int shell, Fn&& fn) const;
};

// One dyadic net level: an (eps, 3/2 eps)-net of K ∩ E_m for eps = 2^{-k},
// m = n(eps).  Points are kept in section coordinates (m rows); coordinates
// past m are identically zero.
struct NetLevel {
  int level = 0;
  double eps = 1.0;
  int section_dim = 0;
  Matrix points;            // section_dim x count, count >= 1
  double separation = 1.0;  // a = eps: pairwise distances >= a
  double density = 1.5;     // b = 1.5 eps: every section point within b
  PointGrid grid;           // query accelerator over `points`

  int count() const { return static_cast<int>(points.cols()); }
  // Point j embedded into the ambient space (zeros past section_dim).
  Vector point_embedded(int j, int ambient_dim) const;
};

// Deterministic greedy net of K ∩ E_m at scale eps: lexicographic sweep over
// the symmetric candidate lattice of step eps/(2 sqrt(m)) (zero-anchored,
// endpoints ±c_k included), keeping a candidate iff it lies in the section
// and is >= eps from every kept point.  The lattice is eps/2-dense in the
// section, so the kept set is an (eps, 3/2 eps)-net of it.
Matrix greedy_net_points(const FlatSetDescriptor& K, int m, double eps);

// Net at dyadic level k: eps = 2^{-k}, m = n_of_eps(eps).  Levels whose eps
// reaches r_0 resolve to the singleton {0}.  Throws std::invalid_argument if
// the required section dimension exceeds the ambient dimension and
// std::length_error if the candidate lattice would be astronomically large
// (the experiments keep d(x, K) >= 1e-4 precisely to stay clear of this).
NetLevel build_net(const FlatSetDescriptor& K, int k);

struct NetCheck {
  bool separation_ok = false;
  bool density_ok = false;
  double min_pair_distance = 0.0;
  double max_sample_distance = 0.0;
};

// Revalidates the two net guarantees: exact pairwise separation >= a (grid
// accelerated) and sampled section coverage within b.
NetCheck verify_net(const FlatSetDescriptor& K, const NetLevel& level, int sample_budget,
                    std::uint64_t seed);

// Memoized per-descriptor net store; build-once semantics guarded by a mutex
// so concurrent partition evaluations share levels.
class NetCache {
 public:
  explicit NetCache(FlatSetDescriptor K);

  const FlatSetDescriptor& descriptor() const { return K_; }
  const NetLevel& level(int k) const;

 private:
  FlatSetDescriptor K_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const NetLevel>> levels_;
};

}  // namespace holonet
