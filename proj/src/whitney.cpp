#include "holonet/whitney.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace holonet {

WhitneyPartition::WhitneyPartition(FlatSetDescriptor K) : nets_(std::move(K)) {}

double WhitneyPartition::eps_of_level(int k) { return std::ldexp(1.0, -k); }

std::vector<int> WhitneyPartition::active_levels(double dist_to_K) {
  std::vector<int> out;
  if (!(dist_to_K > 0.0) || !std::isfinite(dist_to_K)) return out;
  // k is active iff eps_{k+1} < d < 5 eps_{k+1}; the window has width
  // log2(5) ~ 2.32 in level units, so probing around -log2(d) suffices.
  const int base = static_cast<int>(std::floor(-std::log2(dist_to_K)));
  for (int kp1 = base - 2; kp1 <= base + 3; ++kp1) {
    const double eps = eps_of_level(kp1);
    if (eps < dist_to_K && dist_to_K < 5.0 * eps) out.push_back(kp1 - 1);
  }
  return out;
}

double WhitneyPartition::g_hat(int level, int index, const Vector& x,
                               double dist_to_K) const {
  const NetLevel& net = nets_.level(level);
  const double eps_k = eps_of_level(level);
  const double annulus_pen =
      std::max(std::max(eps_k - dist_to_K, dist_to_K - 2.0 * eps_k), 0.0);

  const int m = net.section_dim;
  const auto head = x.head(m);
  const double tail2 = x.size() > m ? x.tail(x.size() - m).squaredNorm() : 0.0;
  double best2 = 0.0;
  net.grid.nearest(net.points, head, &best2);
  const double d_min = std::sqrt(best2 + tail2);
  const double dj = std::sqrt((head - net.points.col(index)).squaredNorm() + tail2);
  return std::max(annulus_pen, 0.5 * (dj - d_min));
}

double WhitneyPartition::psi(int level, int index, const Vector& x,
                             double dist_to_K) const {
  return std::max(0.5 * eps_of_level(level) - g_hat(level, index, x, dist_to_K), 0.0);
}

PartitionEval WhitneyPartition::partition_at(const Vector& x) const {
  PartitionEval eval;
  eval.query = x;
  eval.dist_to_K = distance_to(descriptor(), x);
  if (eval.dist_to_K <= kOnSetThreshold)
    throw OnSetError("partition_at: query lies on the set");

  const int ambient = descriptor().ambient_dim();
  const double psi_sum =
      visit_active(x, eval.dist_to_K,
                   [&](int k, int j, double p, double, const NetLevel& net) {
                     PartitionEntry entry;
                     entry.cell.level = k;
                     entry.cell.index = j;
                     entry.cell.center = net.point_embedded(j, ambient);
                     entry.psi = p;
                     eval.entries.push_back(std::move(entry));
                   });
  std::sort(eval.entries.begin(), eval.entries.end(),
            [](const PartitionEntry& a, const PartitionEntry& b) {
              return std::make_pair(a.cell.level, a.cell.index) <
                     std::make_pair(b.cell.level, b.cell.index);
            });
  for (PartitionEntry& e : eval.entries) e.phi = e.psi / psi_sum;
  return eval;
}

int WhitneyPartition::multiplicity(const Vector& x) const {
  const double d = distance_to(descriptor(), x);
  if (d <= kOnSetThreshold) throw OnSetError("multiplicity: query lies on the set");
  int count = 0;
  visit_active(x, d, [&](int, int, double, double, const NetLevel&) { ++count; });
  return count;
}

bool WhitneyPartition::cell_membership_exact(int level, int index, const Vector& x,
                                             double dist_to_K) const {
  const double eps_k = eps_of_level(level);
  if (!(eps_k <= dist_to_K && dist_to_K < 2.0 * eps_k)) return false;
  const NetLevel& net = nets_.level(level);
  const auto head = x.head(net.section_dim);
  return net.grid.nearest(net.points, head, nullptr) == index;
}

}  // namespace holonet
