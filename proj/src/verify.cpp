#include "holonet/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

#include "holonet/oracle_kit.hpp"

namespace holonet {

namespace {

int scaled(int base, double scale) {
  return std::max(1, static_cast<int>(std::lround(base * scale)));
}

NormFamilyParams default_params() {
  const double delta = 1.0 / 48.0;
  return NormFamilyParams(delta, NormFamilyParams::mu_bound(delta), 12, 26);
}

FlatSetDescriptor default_set(SetShape shape) {
  return FlatSetDescriptor(shape, FlatnessProfile::holder(0.5), 6);
}

FlatnessProfile random_profile(Rng& rng, int len) {
  std::vector<double> values;
  double r = rng.uniform(0.5, 2.0);
  for (int i = 0; i < len; ++i) {
    values.push_back(r);
    r *= rng.uniform(0.2, 0.8);
  }
  return FlatnessProfile::explicit_values(values);
}

Vector off_set_query(const FlatSetDescriptor& K, double target, Rng& rng) {
  return sample_at_distance(K, target, 2.0, rng);
}

double gauge_f(const NormFamilyParams& params, int n, const Vector& x, double c1,
               double c2) {
  const SpecialVectors sv = special_vectors(params, n);
  return (x - c1 * sv.z1 - c2 * sv.z2).norm() + std::abs(c1) + std::abs(c2);
}

double gauge_grid_oracle(const NormFamilyParams& params, int n, const Vector& x) {
  double half = x.norm() + 1e-9;
  double c1c = 0.0, c2c = 0.0;
  double best = gauge_f(params, n, x, 0.0, 0.0);
  for (int round = 0; round < 6; ++round) {
    const double step = half / 20.0;
    double b1 = c1c, b2 = c2c;
    for (int i = -20; i <= 20; ++i) {
      for (int j = -20; j <= 20; ++j) {
        const double c1 = c1c + i * step;
        const double c2 = c2c + j * step;
        const double v = gauge_f(params, n, x, c1, c2);
        if (v < best) {
          best = v;
          b1 = c1;
          b2 = c2;
        }
      }
    }
    c1c = b1;
    c2c = b2;
    half = 1.5 * step;
  }
  return best;
}

double npm_grid_oracle(const NormFamilyParams& params, const SegmentK& K,
                       const Vector& x) {
  Vector probe = x;
  const auto value_at = [&](double t) {
    probe[0] = x[0] - t;
    return norm_union(params, probe).value;
  };
  const double a = K.half_width;
  double best = value_at(0.0), bt = 0.0;
  double step = std::max(1e-3, a / 1000.0);
  for (double t = -a; t <= a + step / 2; t += step) {
    const double tt = std::min(t, a);
    const double v = value_at(tt);
    if (v < best) {
      best = v;
      bt = tt;
    }
  }
  for (int round = 0; round < 4; ++round) {
    const double lo = std::max(-a, bt - 2.0 * step);
    const double hi = std::min(a, bt + 2.0 * step);
    step = (hi - lo) / 80.0;
    if (!(step > 0.0)) break;
    for (int i = 0; i <= 80; ++i) {
      const double t = lo + i * step;
      const double v = value_at(t);
      if (v < best) {
        best = v;
        bt = t;
      }
    }
  }
  return best;
}

using CheckFn = std::function<CheckResult(std::uint64_t, double)>;

CheckResult make_result(const std::string& name, double bound, double measured,
                        bool pass, std::uint64_t seed, std::string detail) {
  CheckResult r;
  r.check_name = name;
  r.bound = bound;
  r.measured = measured;
  r.pass = pass;
  r.seed = seed;
  r.detail = std::move(detail);
  return r;
}

CheckResult check_hull_oracle(std::uint64_t seed, double scale) {
  Rng rng(seed, 101);
  double worst = 0.0;
  const int instances = scaled(60, scale);
  for (int i = 0; i < instances; ++i) {
    const int dim = rng.uniform_int(1, 3);
    const SetShape shape = rng.uniform01() < 0.5 ? SetShape::Box : SetShape::CrossPolytope;
    const FlatSetDescriptor K(shape, random_profile(rng, dim), dim);
    const Vector q = 1.5 * rng.gaussian_vector(dim);
    const double exact = distance_to(K, q);
    HullProblem problem;
    problem.vertices = hull_vertices(K);
    problem.query = q;
    const double oracle = min_norm_point(problem).distance;
    worst = std::max(worst, std::abs(exact - oracle));
  }
  return make_result("hull_oracle", 1e-7, worst, worst <= 1e-7, seed,
                     "max |project_onto - min_norm_point| over random dim<=3 hulls");
}

CheckResult check_grid_oracle(std::uint64_t seed, double scale) {
  Rng rng(seed, 102);
  double worst = 0.0;
  const int instances = scaled(8, scale);
  const double step = 2e-5;
  for (int i = 0; i < instances; ++i) {
    const int dim = rng.uniform_int(1, 2);
    const SetShape shape = rng.uniform01() < 0.5 ? SetShape::Box : SetShape::CrossPolytope;
    const FlatSetDescriptor K(shape, random_profile(rng, dim), dim);
    const Vector q = off_set_query(K, rng.uniform(0.1, 0.5), rng);
    const Projection pr = project_onto(K, q);
    const Vector lo = pr.point.array() - 15.0 * step;
    const Vector hi = pr.point.array() + 15.0 * step;
    const double oracle = grid_distance([&](const Vector& y) { return K.contains(y); },
                                        q, lo, hi, step);
    worst = std::max(worst, std::abs(oracle - pr.distance));
  }
  return make_result("grid_oracle", 3e-5, worst, worst <= 3e-5, seed,
                     "max |grid_distance - project_onto| at step 2e-5 around the projection");
}

CheckResult check_gauge_oracle(std::uint64_t seed, double scale) {
  const NormFamilyParams params = default_params();
  Rng rng(seed, 103);
  double worst = 0.0;
  const int instances = scaled(12, scale);
  for (int i = 0; i < instances; ++i) {
    const int n = (i % 3 == 0) ? 1 : (i % 3 == 1 ? 2 : params.max_index);
    Vector x = Vector::Zero(params.ambient_dim);
    if (i % 2 == 0) {
      x[0] = 2.0 * rng.normal();
      x[2 * n - 1] = 2.0 * rng.normal();
      x[2 * n] = 2.0 * rng.normal();
    } else {
      x = rng.gaussian_vector(params.ambient_dim);
    }
    const double fast = gauge_n(params, n, x).value;
    const double oracle = gauge_grid_oracle(params, n, x);
    worst = std::max(worst, std::abs(fast - oracle) / (1.0 + x.norm()));
  }
  return make_result("gauge_oracle", 1e-6, worst, worst <= 1e-6, seed,
                     "max relative |gauge_n - zoomed grid minimum| over span/full samples");
}

CheckResult check_npm_oracle(std::uint64_t seed, double scale) {
  const NormFamilyParams params = default_params();
  SegmentK K;
  K.half_width = 1.0;
  Rng rng(seed, 104);
  double worst = 0.0;
  const int instances = scaled(10, scale);
  for (int i = 0; i < instances; ++i) {
    Vector x;
    if (i % 2 == 0) {
      const int n = rng.uniform_int(1, params.max_index);
      const SpecialVectors sv = special_vectors(params, n);
      x = rng.uniform(0.5, 1.5) * (i % 4 < 2 ? sv.x1 : sv.x2);
    } else {
      x = 0.3 * rng.gaussian_vector(params.ambient_dim);
    }
    const double fast = npm(params, K, x).distance;
    const double oracle = npm_grid_oracle(params, K, x);
    worst = std::max(worst, std::abs(fast - oracle));
  }
  return make_result("npm_oracle", 1e-6, worst, worst <= 1e-6, seed,
                     "max |npm distance - zoomed t-grid minimum| over the union norm");
}

CheckResult check_modcon(std::uint64_t seed, double scale) {
  Rng rng(seed, 105);
  double worst = 0.0;
  // Exact diametral pairs: ||u - v|| = eps on the unit sphere gives midpoint
  // norm sqrt(1 - (eps/2)^2), meeting the formula with equality.
  for (int i = 0; i < scaled(40, scale); ++i) {
    const double eps = rng.uniform(0.05, 1.95);
    const Vector u = rng.unit_vector(4);
    Vector w = rng.gaussian_vector(4);
    w -= w.dot(u) * u;
    w.normalize();
    const double c = 1.0 - eps * eps / 2.0;
    const Vector v = c * u + std::sqrt(std::max(1.0 - c * c, 0.0)) * w;
    const double deficit = 1.0 - 0.5 * (u + v).norm();
    worst = std::max(worst, std::abs(deficit - modulus_of_convexity_l2(eps)));
  }
  const bool endpoints = modulus_of_convexity_l2(0.0) == 0.0 &&
                         std::abs(modulus_of_convexity_l2(2.0) - 1.0) < 1e-15;
  return make_result("modcon", 1e-12, worst, worst <= 1e-12 && endpoints, seed,
                     "midpoint deficit of exact eps-separated unit pairs vs formula");
}

CheckResult check_deltaineq(std::uint64_t seed, double) {
  const double delta = 1.0 / 48.0;
  const double value = delta_ineq_value(delta);
  return make_result("deltaineq", 1.0, value, value < 1.0, seed,
                     "separation inequality value at delta = 1/48");
}

CheckResult check_geo2(std::uint64_t seed, double scale) {
  const NormFamilyParams params = default_params();
  const SpecialVectors sv = special_vectors(params, 1);
  Matrix P(params.ambient_dim, 4);
  P.col(0) = sv.z1;
  P.col(1) = -sv.z1;
  P.col(2) = sv.z2;
  P.col(3) = -sv.z2;
  const Geo2Result g = geo2_check(P, scaled(500, scale), derive_seed(seed, 106));
  return make_result("geo2", g.rhs + 1e-9, g.max_lhs, g.max_lhs <= g.rhs + 1e-9, seed,
                     "kept " + std::to_string(g.kept) + " hull samples outside the ball");
}

CheckResult check_baseequiv(std::uint64_t seed, double scale) {
  const NormFamilyParams params = default_params();
  Rng rng(seed, 107);
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < scaled(400, scale); ++i) {
    const int n = 1 + i % params.max_index;
    const Vector x = 1.5 * rng.gaussian_vector(params.ambient_dim);
    const double l2 = x.norm();
    const double gauge = gauge_n(params, n, x).value;
    const double fine = norm_fine_n(params, n, x);
    worst = std::max(worst, l2 / (1.0 + 2.0 * params.delta) - gauge);
    worst = std::max(worst, gauge - fine);
    worst = std::max(worst, fine - l2);
  }
  return make_result("baseequiv", 1e-12, worst, worst <= 1e-12, seed,
                     "max violation of l2/(1+2 delta) <= gauge <= fine <= l2");
}

CheckResult check_locality(std::uint64_t seed, double scale) {
  const NormFamilyParams params = default_params();
  Rng rng(seed, 108);
  double worst = 0.0;
  for (int i = 0; i < scaled(200, scale); ++i) {
    const int n = 1 + i % params.max_index;
    Vector x = rng.gaussian_vector(params.ambient_dim);
    x[2 * n - 1] = 0.0;
    x[2 * n] = 0.0;
    worst = std::max(worst, std::abs(gauge_n(params, n, x).value - x.norm()));
  }
  return make_result("locality", 1e-12, worst, worst <= 1e-12, seed,
                     "gauge_n equals l2 on vectors orthogonal to its two special coordinates");
}

CheckResult check_rotund(std::uint64_t seed, double scale) {
  const NormFamilyParams params = default_params();
  Rng rng(seed, 109);
  double worst = 0.0;
  int tested = 0;
  const auto unit = [&](Vector x) {
    x /= norm_union(params, x).value;
    return x;
  };
  const auto consider = [&](const Vector& u, const Vector& v) {
    if ((u - v).norm() < 1e-6) return;
    worst = std::max(worst, norm_union(params, 0.5 * (u + v)).value);
    ++tested;
  };
  for (int i = 0; i < scaled(300, scale); ++i)
    consider(unit(rng.gaussian_vector(params.ambient_dim)),
             unit(rng.gaussian_vector(params.ambient_dim)));
  // Same-face pairs: both endpoints sit where a single gauge piece is flat,
  // so only the Euclidean blend keeps the midpoint strictly inside.  The
  // blend weight is mu/n^2, leaving a midpoint deficit of order 1e-11; pairs
  // closer than ~0.3 radians push the deficit below double precision, so the
  // angles stay wide.
  for (int i = 0; i < scaled(100, scale); ++i) {
    const int n = 1 + i % 2;
    const SpecialVectors sv = special_vectors(params, n);
    const double theta = rng.uniform(0.3, 1.27);
    consider(unit(sv.z1), unit(std::cos(theta) * sv.z1 + std::sin(theta) * sv.z2));
  }
  return make_result("rotund", 1.0, worst, worst < 1.0 && tested > 0, seed,
                     "max union-norm of midpoints of distinct union-unit pairs");
}

CheckResult check_slice(std::uint64_t seed, double scale) {
  const NormFamilyParams params = default_params();
  const double bound = 33.0 * params.mu / (params.delta * params.delta);
  double worst = 0.0;
  int stream = 110;
  for (const int n : {1, 2, params.max_index})
    for (const int i : {1, 2})
      worst = std::max(worst, check_slice_lemma(params, n, i, scaled(300, scale),
                                                derive_seed(seed, stream++)));
  return make_result("slice", bound, worst, worst <= bound, seed,
                     "max gauge distance to z_{i,n} over sampled slice points");
}

CheckResult check_closed(std::uint64_t seed, double scale) {
  const NormFamilyParams params = default_params();
  const double bound = 1.0 - 10.0 * params.delta;
  double worst = std::numeric_limits<double>::infinity();
  int stream = 120;
  const int M = params.max_index;
  for (const auto& [n, m] : {std::pair<int, int>{1, 2}, {1, M}, {2, M}})
    worst = std::min(worst, check_separation(params, n, m, scaled(250, scale),
                                             derive_seed(seed, stream++)));
  return make_result("closed", bound, worst, worst >= bound, seed,
                     "min sampled distance between hull petals of distinct indices");
}

CheckResult check_claim(std::uint64_t seed, double scale) {
  const NormFamilyParams params = default_params();
  double worst = 0.0;
  int stream = 130;
  for (const int n : {1, 2, params.max_index})
    for (const int i : {1, 2}) {
      const double sup = check_claim_sup(params, n, i, scaled(200, scale),
                                         derive_seed(seed, stream++));
      const double cap = 1.0 + params.delta * params.delta / (4.0 * n * n);
      worst = std::max(worst, sup / cap);
    }
  return make_result("claim", 1.0, worst, worst < 1.0, seed,
                     "max ratio of the functional sup to 1 + delta^2/(4n^2)");
}

std::vector<DivergenceRow> divergence_rows(const NormFamilyParams& params,
                                           bool euclidean) {
  SegmentK K;
  K.half_width = 1.0;
  return divergence_experiment(params, K, 1.0, 2, std::min(8, params.max_index),
                               euclidean);
}

CheckResult check_npm_output_gap(std::uint64_t seed, double) {
  const NormFamilyParams params = default_params();
  const auto rows = divergence_rows(params, false);
  double worst = std::numeric_limits<double>::infinity();
  for (const DivergenceRow& r : rows) worst = std::min(worst, r.output_gap);
  const double bound = params.delta / (1.0 + params.delta);
  return make_result("npm_output_gap", bound, worst, worst >= bound - 1e-6, seed,
                     "min output gap across n; inputs shrink but outputs stay apart");
}

CheckResult check_npm_input_gap(std::uint64_t seed, double) {
  const NormFamilyParams params = default_params();
  const auto rows = divergence_rows(params, false);
  double worst = 0.0;
  bool monotone = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    worst = std::max(worst, rows[i].input_gap / rows[i].upper_bound_input);
    if (i > 0) monotone = monotone && rows[i].input_gap <= rows[i - 1].input_gap + 1e-12;
  }
  return make_result("npm_input_gap", 1.0 + 1e-9, worst,
                     worst <= 1.0 + 1e-9 && monotone, seed,
                     "max input gap relative to 2 eps delta / n; also checks monotone decay");
}

CheckResult check_npm_goal(std::uint64_t seed, double) {
  const NormFamilyParams params = default_params();
  const auto rows = divergence_rows(params, false);
  double worst = 0.0;
  for (const DivergenceRow& r : rows)
    worst = std::max(worst, std::max(r.goal_dev1, r.goal_dev2));
  const double bound = 66.0 * params.mu / (params.delta * params.delta) + 1e-6;
  return make_result("npm_goal", bound, worst, worst <= bound, seed,
                     "max deviation of the returned point from (-1)^{i+1} eps delta e_1");
}

CheckResult check_npm_euclidean_contrast(std::uint64_t seed, double) {
  const NormFamilyParams params = default_params();
  const auto rows = divergence_rows(params, true);
  double worst = 0.0;
  for (const DivergenceRow& r : rows) worst = std::max(worst, r.output_gap);
  return make_result("npm_euclidean_contrast", 1e-12, worst, worst <= 1e-12, seed,
                     "Hilbert nearest point collapses all output gaps to zero");
}

CheckResult check_net_separation(std::uint64_t seed, double scale) {
  double worst = std::numeric_limits<double>::infinity();
  int stream = 140;
  for (const SetShape shape : {SetShape::Box, SetShape::CrossPolytope}) {
    const FlatSetDescriptor K = default_set(shape);
    for (const int k : {0, 3, 6, 9}) {
      const NetLevel level = build_net(K, k);
      const NetCheck nc = verify_net(K, level, scaled(300, scale),
                                     derive_seed(seed, stream++));
      if (level.count() > 1)
        worst = std::min(worst, nc.min_pair_distance / level.separation);
    }
  }
  if (!std::isfinite(worst)) worst = 1.0;
  return make_result("net_separation", 1.0, worst, worst >= 1.0 - 1e-12, seed,
                     "min pairwise distance over net levels, relative to eps");
}

CheckResult check_net_density(std::uint64_t seed, double scale) {
  double worst = 0.0;
  int stream = 150;
  for (const SetShape shape : {SetShape::Box, SetShape::CrossPolytope}) {
    const FlatSetDescriptor K = default_set(shape);
    for (const int k : {0, 3, 6, 9}) {
      const NetLevel level = build_net(K, k);
      const NetCheck nc = verify_net(K, level, scaled(300, scale),
                                     derive_seed(seed, stream++));
      worst = std::max(worst, nc.max_sample_distance / level.density);
    }
  }
  return make_result("net_density", 1.0, worst, worst <= 1.0 + 1e-9, seed,
                     "max sampled section distance over net levels, relative to 1.5 eps");
}

CheckResult check_heights(std::uint64_t seed, double scale) {
  double worst = 0.0;
  int stream = 160;
  for (const SetShape shape : {SetShape::Box, SetShape::CrossPolytope}) {
    const FlatSetDescriptor K = default_set(shape);
    const auto rows = estimate_heights(K, scaled(4000, scale), derive_seed(seed, stream++));
    for (const HeightEstimate& h : rows)
      worst = std::max(worst, h.lower_bound / r_value(K.profile(), h.n));
  }
  return make_result("heights", 1.0, worst, worst <= 1.0 + 1e-12, seed,
                     "max estimated section height relative to the profile value r_n");
}

CheckResult check_partition_sum(std::uint64_t seed, double scale) {
  double worst = 0.0;
  int stream = 170;
  for (const SetShape shape : {SetShape::Box, SetShape::CrossPolytope}) {
    const WhitneyPartition part(default_set(shape));
    Rng rng(seed, static_cast<std::uint64_t>(stream++));
    for (int i = 0; i < scaled(250, scale); ++i) {
      const double target = std::exp(rng.uniform(std::log(1e-3), std::log(0.9)));
      const PartitionEval eval =
          part.partition_at(off_set_query(part.descriptor(), target, rng));
      double sum = 0.0;
      for (const PartitionEntry& e : eval.entries) {
        if (e.phi < 0.0) worst = std::max(worst, 1.0);
        sum += e.phi;
      }
      worst = std::max(worst, std::abs(sum - 1.0));
    }
  }
  return make_result("partition_sum", 1e-12, worst, worst <= 1e-12, seed,
                     "max |sum phi - 1| with phi >= 0 over off-set queries");
}

CheckResult check_partition_psi_floor(std::uint64_t seed, double scale) {
  double worst = std::numeric_limits<double>::infinity();
  int stream = 180;
  for (const SetShape shape : {SetShape::Box, SetShape::CrossPolytope}) {
    const WhitneyPartition part(default_set(shape));
    Rng rng(seed, static_cast<std::uint64_t>(stream++));
    for (int i = 0; i < scaled(250, scale); ++i) {
      const double target = std::exp(rng.uniform(std::log(1e-3), std::log(0.9)));
      const Vector x = off_set_query(part.descriptor(), target, rng);
      const PartitionEval eval = part.partition_at(x);
      double sum = 0.0;
      for (const PartitionEntry& e : eval.entries) sum += e.psi;
      worst = std::min(worst, sum / (eval.dist_to_K / 4.0));
    }
  }
  return make_result("partition_psi_floor", 1.0, worst, worst >= 1.0 - 1e-9, seed,
                     "min of (sum psi) / (d_K/4) over off-set queries");
}

CheckResult check_partition_support(std::uint64_t seed, double scale) {
  double worst = 0.0;
  int stream = 190;
  for (const SetShape shape : {SetShape::Box, SetShape::CrossPolytope}) {
    const WhitneyPartition part(default_set(shape));
    Rng rng(seed, static_cast<std::uint64_t>(stream++));
    for (int i = 0; i < scaled(250, scale); ++i) {
      const double target = std::exp(rng.uniform(std::log(1e-3), std::log(0.9)));
      const Vector x = off_set_query(part.descriptor(), target, rng);
      const PartitionEval eval = part.partition_at(x);
      for (const PartitionEntry& e : eval.entries)
        worst = std::max(worst, (x - e.cell.center).norm() / eval.dist_to_K);
    }
  }
  return make_result("partition_support", 9.0, worst, worst <= 9.0, seed,
                     "max distance from query to an active cell center, relative to d_K");
}

CheckResult check_retract_identity(std::uint64_t seed, double scale) {
  double worst = 0.0;
  int stream = 200;
  for (const SetShape shape : {SetShape::Box, SetShape::CrossPolytope}) {
    const WhitneyPartition part(default_set(shape));
    Rng rng(seed, static_cast<std::uint64_t>(stream++));
    for (int i = 0; i < scaled(200, scale); ++i) {
      const Vector x = sample_point(part.descriptor(), rng);
      worst = std::max(worst, (retract(part, x) - x).norm());
    }
  }
  return make_result("retract_identity", 1e-12, worst, worst <= 1e-12, seed,
                     "max ||R(x) - x|| over points of the set");
}

CheckResult check_retract_displacement(std::uint64_t seed, double scale) {
  double worst = 0.0;
  int stream = 210;
  for (const SetShape shape : {SetShape::Box, SetShape::CrossPolytope}) {
    const WhitneyPartition part(default_set(shape));
    Rng rng(seed, static_cast<std::uint64_t>(stream++));
    for (int i = 0; i < scaled(250, scale); ++i) {
      const double target = std::exp(rng.uniform(std::log(1e-3), std::log(0.9)));
      const Vector x = off_set_query(part.descriptor(), target, rng);
      worst = std::max(worst, (retract(part, x) - x).norm() / target);
    }
  }
  return make_result("retract_displacement", 9.0, worst, worst <= 9.0, seed,
                     "max ||R(x) - x|| / d_K over off-set queries");
}

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"hull_oracle", check_hull_oracle},
      {"grid_oracle", check_grid_oracle},
      {"gauge_oracle", check_gauge_oracle},
      {"npm_oracle", check_npm_oracle},
      {"modcon", check_modcon},
      {"deltaineq", check_deltaineq},
      {"geo2", check_geo2},
      {"baseequiv", check_baseequiv},
      {"locality", check_locality},
      {"rotund", check_rotund},
      {"slice", check_slice},
      {"closed", check_closed},
      {"claim", check_claim},
      {"npm_output_gap", check_npm_output_gap},
      {"npm_input_gap", check_npm_input_gap},
      {"npm_goal", check_npm_goal},
      {"npm_euclidean_contrast", check_npm_euclidean_contrast},
      {"net_separation", check_net_separation},
      {"net_density", check_net_density},
      {"heights", check_heights},
      {"partition_sum", check_partition_sum},
      {"partition_psi_floor", check_partition_psi_floor},
      {"partition_support", check_partition_support},
      {"retract_identity", check_retract_identity},
      {"retract_displacement", check_retract_displacement},
  };
  return table;
}

}  // namespace

std::vector<std::string> verify_check_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
  if (!(options.budget_scale > 0.0))
    throw std::invalid_argument("run_verify: budget_scale must be positive");
  for (const std::string& name : options.only) {
    bool known = false;
    for (const auto& [reg_name, fn] : registry()) known = known || reg_name == name;
    if (!known) throw std::invalid_argument("run_verify: unknown check '" + name + "'");
  }
  std::vector<CheckResult> results;
  for (const auto& [name, fn] : registry()) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), name) == options.only.end())
      continue;
    results.push_back(fn(options.seed, options.budget_scale));
  }
  return results;
}

}  // namespace holonet
