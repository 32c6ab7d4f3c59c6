#include "holonet/retraction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "holonet/parallel.hpp"

namespace holonet {

Vector retract(const WhitneyPartition& partition, const Vector& x) {
  const FlatSetDescriptor& K = partition.descriptor();
  const Projection pr = project_onto(K, x);
  if (pr.distance <= kOnSetThreshold) return pr.point;

  Vector acc = Vector::Zero(x.size());
  const double psi_sum = partition.visit_active(
      x, pr.distance, [&](int, int j, double p, double, const NetLevel& net) {
        acc.head(net.points.rows()) += p * net.points.col(j);
      });
  if (!(psi_sum > 0.0))
    throw std::runtime_error("retract: no active cell carries weight");
  return acc / psi_sum;
}

ModulusTable empirical_modulus(const WhitneyPartition& partition,
                               const ModulusOptions& options) {
  if (options.t_grid.empty())
    throw std::invalid_argument("empirical_modulus: empty t grid");
  for (std::size_t i = 0; i < options.t_grid.size(); ++i) {
    if (!(options.t_grid[i] > 0.0))
      throw std::invalid_argument("empirical_modulus: t values must be positive");
    if (i > 0 && options.t_grid[i] <= options.t_grid[i - 1])
      throw std::invalid_argument("empirical_modulus: t grid must be ascending");
  }
  if (options.pair_budget < 1)
    throw std::invalid_argument("empirical_modulus: pair budget must be >= 1");
  if (!(options.dist_floor > 0.0) || !(options.dist_ceiling >= options.dist_floor))
    throw std::invalid_argument("empirical_modulus: bad distance strata");

  const FlatSetDescriptor& K = partition.descriptor();
  const auto row_count = options.t_grid.size();
  const auto budget = static_cast<std::size_t>(options.pair_budget);
  const double log_lo = std::log(options.dist_floor);
  const double log_hi = std::log(options.dist_ceiling);

  // One slot per (row, pair); -1 marks a dropped pair.  Slots are written by
  // index, so the result does not depend on the worker count.
  std::vector<double> displacement(row_count * budget, -1.0);
  parallel_for(row_count * budget, [&](std::size_t idx) {
    const double t = options.t_grid[idx / budget];
    Rng rng(options.seed, idx + 1);
    const double target = std::exp(rng.uniform(log_lo, log_hi));
    const Vector x = sample_at_distance(K, target, options.box_halfwidth, rng);

    // The second endpoint must stay clear of the thin shell just off K where
    // partition levels get prohibitively deep; on K itself is fine (exact
    // projection).  Redraw the direction until it does.
    for (int tries = 0; tries < 100; ++tries) {
      const Vector y = x + t * rng.unit_vector(x.size());
      const double dy = distance_to(K, y);
      if (dy <= kOnSetThreshold || dy >= options.dist_floor * (1.0 - 1e-12)) {
        displacement[idx] = (retract(partition, x) - retract(partition, y)).norm();
        return;
      }
    }
  });

  ModulusTable table;
  table.seed = options.seed;
  table.pair_budget = options.pair_budget;
  table.rows.resize(row_count);
  for (std::size_t r = 0; r < row_count; ++r) {
    ModulusRow& row = table.rows[r];
    row.t = options.t_grid[r];
    for (std::size_t i = 0; i < budget; ++i) {
      const double d = displacement[r * budget + i];
      if (d < 0.0) continue;
      ++row.pairs;
      row.omega_hat = std::max(row.omega_hat, d);
    }
    if (r > 0) row.omega_hat = std::max(row.omega_hat, table.rows[r - 1].omega_hat);
  }
  return table;
}

HolderFit holder_fit(const ModulusTable& table, double t_min, double t_max) {
  std::vector<double> lt, lw;
  for (const ModulusRow& row : table.rows) {
    if (row.t < t_min * (1.0 - 1e-12) || row.t > t_max * (1.0 + 1e-12)) continue;
    if (!(row.omega_hat > 0.0)) continue;
    lt.push_back(std::log(row.t));
    lw.push_back(std::log(row.omega_hat));
  }
  const auto n = lt.size();
  if (n < 5)
    throw std::invalid_argument("holder_fit: fewer than 5 usable table rows");

  double mt = 0.0, mw = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mt += lt[i];
    mw += lw[i];
  }
  mt /= static_cast<double>(n);
  mw /= static_cast<double>(n);
  double stt = 0.0, stw = 0.0, sww = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    stt += (lt[i] - mt) * (lt[i] - mt);
    stw += (lt[i] - mt) * (lw[i] - mw);
    sww += (lw[i] - mw) * (lw[i] - mw);
  }

  HolderFit fit;
  fit.exponent = stw / stt;
  fit.log_constant = mw - fit.exponent * mt;
  fit.r_squared = sww > 0.0 ? (stw * stw) / (stt * sww) : 1.0;
  fit.t_min = std::exp(*std::min_element(lt.begin(), lt.end()));
  fit.t_max = std::exp(*std::max_element(lt.begin(), lt.end()));
  fit.points = static_cast<int>(n);
  return fit;
}

double implementation_constant(const ModulusTable& table,
                               const FlatnessProfile& profile) {
  double c = 0.0;
  for (const ModulusRow& row : table.rows) {
    if (!(row.omega_hat > 0.0)) continue;
    const double scale =
        std::pow(20.0, n_of_eps(profile, row.t / 20.0)) * row.t;
    c = std::max(c, row.omega_hat / scale);
  }
  return c;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi >= lo) || count < 1)
    throw std::invalid_argument("log_spaced: need 0 < lo <= hi and count >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    out.push_back(lo);
    return out;
  }
  const double step = (std::log(hi) - std::log(lo)) / (count - 1);
  for (int i = 0; i < count; ++i)
    out.push_back(std::exp(std::log(lo) + step * i));
  return out;
}

}  // namespace holonet
