#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "holonet/nets.hpp"

namespace holonet {

// Queries closer to K than this are "on" K: the partition is undefined there
// and retract() short-circuits to the exact projection.
inline constexpr double kOnSetThreshold = 1e-12;

class OnSetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Cell {
  int level = 0;   // k: annulus scale [2^-k, 2^-k+1)
  int index = 0;   // j: net point index within level k
  Vector center;   // net point embedded in the ambient space
};

struct PartitionEntry {
  Cell cell;
  double psi = 0.0;
  double phi = 0.0;
};

struct PartitionEval {
  Vector query;
  double dist_to_K = 0.0;
  std::vector<PartitionEntry> entries;  // psi > 0 only, sorted by (level, index)
};

// Whitney-type partition of unity on the complement of K, built from the
// dyadic net levels.  Instead of exact distances to the Voronoi-annulus
// pieces, weights use the computable 1-Lipschitz lower surrogate
//
//   g_hat = max( pos(eps_k - d_K(x)),
//                pos(d_K(x) - eps_{k-1}),
//                pos(d(x, x_j^k) - min_l d(x, x_l^k)) / 2 )
//   psi   = pos(eps_{k+1} - g_hat),     eps_k = 2^{-k},
//
// which vanishes outside slightly enlarged cells and equals eps_{k+1} on the
// exact cell.  Only levels with eps_{k+1} < d_K(x) < 5 eps_{k+1} can carry
// weight, so at most 3 consecutive levels are ever active.
class WhitneyPartition {
 public:
  explicit WhitneyPartition(FlatSetDescriptor K);

  const FlatSetDescriptor& descriptor() const { return nets_.descriptor(); }
  const NetCache& nets() const { return nets_; }

  static double eps_of_level(int k);  // 2^{-k}

  double g_hat(int level, int index, const Vector& x, double dist_to_K) const;
  double psi(int level, int index, const Vector& x, double dist_to_K) const;

  // Full evaluation at x: throws OnSetError when d(x, K) <= kOnSetThreshold.
  PartitionEval partition_at(const Vector& x) const;

  // Number of cells with psi > 0 at x.
  int multiplicity(const Vector& x) const;

  // Exact cell membership: x in the annulus of level k and x_j^k is the
  // distance-minimizing net point (ties toward the lower index).
  bool cell_membership_exact(int level, int index, const Vector& x,
                             double dist_to_K) const;

  // Levels k that satisfy the activity window eps_{k+1} < d < 5 eps_{k+1}.
  static std::vector<int> active_levels(double dist_to_K);

  // Enumerates every (level, index, psi, dist) with psi > 0 at x; the core
  // shared by partition_at / multiplicity / retract.  Returns sum of psi.
  template <typename Visitor>
  double visit_active(const Vector& x, double dist_to_K, Visitor&& visit) const;

 private:
  NetCache nets_;
};

template <typename Visitor>
double WhitneyPartition::visit_active(const Vector& x, double dist_to_K,
                                      Visitor&& visit) const {
  double psi_sum = 0.0;
  for (int k : active_levels(dist_to_K)) {
    const NetLevel& net = nets_.level(k);
    const double eps_k = eps_of_level(k);
    const double eps_km1 = 2.0 * eps_k;
    const double eps_kp1 = 0.5 * eps_k;
    const double annulus_pen =
        std::max(std::max(eps_k - dist_to_K, dist_to_K - eps_km1), 0.0);
    if (annulus_pen >= eps_kp1) continue;

    const int m = net.section_dim;
    const auto head = x.head(m);
    const double tail2 = x.size() > m ? x.tail(x.size() - m).squaredNorm() : 0.0;
    double best2 = 0.0;
    net.grid.nearest(net.points, head, &best2);
    const double d_min = std::sqrt(best2 + tail2);

    // Any cell with psi > 0 obeys d_j < d_min + 2 eps_{k+1}.
    const double reach = d_min + 2.0 * eps_kp1;
    const double reach2_section = reach * reach - tail2;
    if (reach2_section <= 0.0) continue;
    for (int j : net.grid.within(net.points, head, std::sqrt(reach2_section))) {
      const double dj =
          std::sqrt((head - net.points.col(j)).squaredNorm() + tail2);
      const double g = std::max(annulus_pen, 0.5 * (dj - d_min));
      const double p = eps_kp1 - g;
      if (p > 0.0) {
        psi_sum += p;
        visit(k, j, p, dj, net);
      }
    }
  }
  return psi_sum;
}

}  // namespace holonet
