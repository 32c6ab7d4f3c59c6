#include "holonet/oracle_kit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "holonet/rng.hpp"

namespace holonet {

namespace {

// Affine minimizer of ||V beta|| subject to sum beta = 1 for the columns of
// V listed in `support`.  Bordered Gram system with a tiny ridge for
// affinely dependent supports.
Eigen::VectorXd affine_minimizer(const Matrix& V, const std::vector<int>& support) {
  const int s = static_cast<int>(support.size());
  Matrix G(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j <= i; ++j)
      G(i, j) = G(j, i) = V.col(support[i]).dot(V.col(support[j]));
  const double ridge = 1e-13 * (G.trace() + 1.0);
  Matrix A = Matrix::Zero(s + 1, s + 1);
  A.topLeftCorner(s, s) = G + ridge * Matrix::Identity(s, s);
  A.topRightCorner(s, 1).setOnes();
  A.bottomLeftCorner(1, s).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(s + 1);
  rhs[s] = 1.0;
  Eigen::VectorXd sol = A.completeOrthogonalDecomposition().solve(rhs);
  return sol.head(s);
}

}  // namespace

MinNormResult min_norm_point(const HullProblem& problem, double tol) {
  const Index dim = problem.vertices.rows();
  const int n = static_cast<int>(problem.vertices.cols());
  if (n < 1) throw std::invalid_argument("min_norm_point: empty vertex set");
  if (problem.query.size() != dim)
    throw std::invalid_argument("min_norm_point: query dimension mismatch");

  Matrix V = problem.vertices.colwise() - problem.query;

  int start = 0;
  double best = V.col(0).squaredNorm();
  for (int j = 1; j < n; ++j) {
    double s = V.col(j).squaredNorm();
    if (s < best) {
      best = s;
      start = j;
    }
  }

  std::vector<int> support{start};
  Eigen::VectorXd alpha = Eigen::VectorXd::Ones(1);
  Vector x = V.col(start);

  const int max_major = 10 * n * static_cast<int>(dim) + 100;
  int iter = 0;
  for (; iter < max_major; ++iter) {
    // Linear minimization step.
    int jstar = 0;
    double inner_best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      double v = x.dot(V.col(j));
      if (v < inner_best) {
        inner_best = v;
        jstar = j;
      }
    }
    const double scale = std::max(1.0, x.squaredNorm());
    if (inner_best >= x.squaredNorm() - tol * scale) break;
    bool already = false;
    for (int idx : support)
      if (idx == jstar) already = true;
    if (already) break;  // numerical stall guard

    support.push_back(jstar);
    alpha.conservativeResize(alpha.size() + 1);
    alpha[alpha.size() - 1] = 0.0;

    // Minor cycle: pull x to the affine minimizer, dropping vertices whose
    // coefficient would leave the simplex.
    for (int minor = 0; minor < 4 * n + 16; ++minor) {
      Eigen::VectorXd beta = affine_minimizer(V, support);
      if ((beta.array() >= -1e-12).all()) {
        alpha = beta.cwiseMax(0.0);
        alpha /= alpha.sum();
        break;
      }
      double theta = 1.0;
      for (int i = 0; i < beta.size(); ++i)
        if (beta[i] < 0.0 && alpha[i] > beta[i])
          theta = std::min(theta, alpha[i] / (alpha[i] - beta[i]));
      alpha = alpha + theta * (beta - alpha);
      std::vector<int> kept;
      std::vector<double> kept_a;
      for (int i = 0; i < alpha.size(); ++i) {
        if (alpha[i] > 1e-12) {
          kept.push_back(support[i]);
          kept_a.push_back(alpha[i]);
        }
      }
      if (kept.empty()) {
        kept.push_back(support[0]);
        kept_a.push_back(1.0);
      }
      support = kept;
      alpha = Eigen::Map<Eigen::VectorXd>(kept_a.data(), static_cast<Index>(kept_a.size()));
      alpha /= alpha.sum();
    }
    x.setZero();
    for (int i = 0; i < alpha.size(); ++i) x += alpha[i] * V.col(support[i]);
  }

  MinNormResult result;
  result.distance = x.norm();
  result.point = x + problem.query;
  result.iterations = iter;
  return result;
}

Geo2Result geo2_check(const Matrix& P, int sample_budget, std::uint64_t seed) {
  const int n = static_cast<int>(P.cols());
  if (n < 1) throw std::invalid_argument("geo2_check: empty point set");
  double sup2 = 0.0;
  for (int j = 0; j < n; ++j) {
    const double s = P.col(j).squaredNorm();
    if (s < 1.0 - 1e-9)
      throw std::invalid_argument("geo2_check: P must lie outside the open unit ball");
    sup2 = std::max(sup2, s);
  }

  Geo2Result result;
  result.rhs = std::sqrt(std::max(0.0, sup2 - 1.0));

  Rng rng(seed);
  const Index dim = P.rows();
  for (int i = 0; i < sample_budget; ++i) {
    Vector w = rng.simplex_point(n);
    Vector p = P * w;
    Vector b = rng.unit_vector(dim);
    // Acceptance needs ||x|| > 1; hull points barely clear the sphere, so
    // bias lambda toward 1 and half the draws toward sphere points near p.
    double lambda = 1.0 - rng.uniform01() * rng.uniform01() * 0.5;
    if (rng.uniform01() < 0.5) b = (p + 0.25 * b).normalized();
    Vector x = lambda * p + (1.0 - lambda) * b;
    if (x.norm() <= 1.0) continue;
    ++result.kept;
    HullProblem hp{P, x};
    result.max_lhs = std::max(result.max_lhs, min_norm_point(hp).distance);
  }
  return result;
}

double modulus_of_convexity_l2(double eps) {
  if (eps < 0.0 || eps > 2.0)
    throw std::domain_error("modulus_of_convexity_l2: eps outside [0, 2]");
  const double h = eps / 2.0;
  return 1.0 - std::sqrt(1.0 - h * h);
}

double delta_ineq_value(double delta) {
  if (delta <= 0.0 || delta > 1.0 / 48.0 + 1e-15)
    throw std::domain_error("delta_ineq_value: delta outside (0, 1/48]");
  const double ratio = (1.0 - 10.0 * delta) / (1.0 + 2.0 * delta);
  return (1.0 + 2.0 * delta) * std::sqrt(1.0 - ratio * ratio);
}

double grid_distance(const std::function<bool(const Vector&)>& member,
                     const Vector& query, const Vector& lo, const Vector& hi,
                     double step) {
  const Index dim = query.size();
  if (lo.size() != dim || hi.size() != dim)
    throw std::invalid_argument("grid_distance: box dimension mismatch");
  if (step <= 0.0) throw std::invalid_argument("grid_distance: step must be positive");

  std::vector<long long> counts(static_cast<std::size_t>(dim));
  double total = 1.0;
  for (Index d = 0; d < dim; ++d) {
    if (hi[d] < lo[d]) throw std::invalid_argument("grid_distance: empty box");
    counts[static_cast<std::size_t>(d)] =
        static_cast<long long>(std::floor((hi[d] - lo[d]) / step)) + 1;
    total *= static_cast<double>(counts[static_cast<std::size_t>(d)]);
  }
  if (total > 2e8) throw std::invalid_argument("grid_distance: grid too large");

  Vector point(dim);
  std::vector<long long> idx(static_cast<std::size_t>(dim), 0);
  double best = std::numeric_limits<double>::infinity();
  bool found = false;
  bool done = false;
  while (!done) {
    for (Index d = 0; d < dim; ++d)
      point[d] = lo[d] + step * static_cast<double>(idx[static_cast<std::size_t>(d)]);
    if (member(point)) {
      found = true;
      best = std::min(best, (point - query).norm());
    }
    done = true;
    for (Index d = dim - 1; d >= 0; --d) {
      auto& i = idx[static_cast<std::size_t>(d)];
      if (++i < counts[static_cast<std::size_t>(d)]) {
        done = false;
        break;
      }
      i = 0;
    }
  }
  if (!found) throw std::invalid_argument("grid_distance: no grid point in the set");
  return best;
}

}  // namespace holonet
