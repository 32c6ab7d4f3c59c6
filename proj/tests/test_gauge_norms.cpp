#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "holonet/gauge_norms.hpp"
#include "holonet/rng.hpp"

using namespace holonet;

namespace {

NormFamilyParams small_params() {
  const double delta = 1.0 / 48.0;
  return NormFamilyParams(delta, NormFamilyParams::mu_bound(delta), 3, 8);
}

}  // namespace

TEST_CASE("parameter guards") {
  const double delta = 1.0 / 48.0;
  const double mu = NormFamilyParams::mu_bound(delta);
  CHECK(mu == doctest::Approx(std::pow(delta, 3) / (132.0 * (1.0 + 2.0 * delta)))
                  .epsilon(1e-15));
  CHECK_NOTHROW(NormFamilyParams(delta, mu, 3, 8));
  CHECK_THROWS_AS(NormFamilyParams(0.03, mu, 3, 8), std::invalid_argument);
  CHECK_THROWS_AS(NormFamilyParams(0.0, mu, 3, 8), std::invalid_argument);
  CHECK_THROWS_AS(NormFamilyParams(delta, mu * 1.01, 3, 8), std::invalid_argument);
  CHECK_THROWS_AS(NormFamilyParams(delta, 0.0, 3, 8), std::invalid_argument);
  CHECK_THROWS_AS(NormFamilyParams(delta, mu, 3, 7), std::invalid_argument);
}

TEST_CASE("special vectors have the documented coordinates") {
  const NormFamilyParams p = small_params();
  const SpecialVectors sv = special_vectors(p, 2);
  CHECK(sv.x1[3] == 1.0);                          // e_4 (0-based index 3)
  CHECK(sv.x1[4] == doctest::Approx(p.delta / 2.0));   // +(delta/n) e_5
  CHECK(sv.x2[4] == doctest::Approx(-p.delta / 2.0));
  CHECK(sv.z1[0] == doctest::Approx(-p.delta));    // z_1 = x_1 - delta e_1
  CHECK(sv.z2[0] == doctest::Approx(p.delta));
  CHECK((sv.z1 + sv.z2 - (sv.x1 + sv.x2)).norm() == 0.0);
  CHECK_THROWS_AS(special_vectors(p, 0), std::invalid_argument);
  CHECK_THROWS_AS(special_vectors(p, 4), std::invalid_argument);
}

TEST_CASE("functionals pair with the special vectors") {
  const NormFamilyParams p = small_params();
  for (int n = 1; n <= p.max_index; ++n) {
    const SpecialVectors sv = special_vectors(p, n);
    const double expect = 1.0 + p.delta * p.delta / (2.0 * n * n);
    CHECK(functional_eval(p, 1, n, sv.x1) == doctest::Approx(expect).epsilon(1e-15));
    CHECK(functional_eval(p, 1, n, sv.z1) == doctest::Approx(expect).epsilon(1e-15));
    CHECK(functional_eval(p, 2, n, sv.x2) == doctest::Approx(expect).epsilon(1e-15));
    // The cross evaluation comes out strictly smaller.
    CHECK(functional_eval(p, 1, n, sv.x2) ==
          doctest::Approx(1.0 - p.delta * p.delta / (2.0 * n * n)).epsilon(1e-15));
    // e_1 is in the kernel.
    Vector e1 = Vector::Zero(p.ambient_dim);
    e1[0] = 1.0;
    CHECK(functional_eval(p, 1, n, e1) == 0.0);
  }
}

TEST_CASE("gauge of the distinguished vectors is exactly one") {
  const NormFamilyParams p = small_params();
  for (int n = 1; n <= p.max_index; ++n) {
    const SpecialVectors sv = special_vectors(p, n);
    for (const Vector* v : {&sv.z1, &sv.z2}) {
      const GaugeResult g = gauge_n(p, n, *v);
      CHECK(g.value == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(g.value <= 1.0 + g.tolerance);
    }
    // The midpoint e_{2n} of the face also has gauge one.
    const GaugeResult mid = gauge_n(p, n, 0.5 * (sv.z1 + sv.z2));
    CHECK(mid.value == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("gauge witness reproduces the reported value") {
  const NormFamilyParams p = small_params();
  Rng rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % p.max_index;
    const SpecialVectors sv = special_vectors(p, n);
    const Vector x = 2.0 * rng.gaussian_vector(p.ambient_dim);
    const GaugeResult g = gauge_n(p, n, x);
    const double recon =
        (x - g.c1 * sv.z1 - g.c2 * sv.z2).norm() + std::abs(g.c1) + std::abs(g.c2);
    CHECK(g.value == doctest::Approx(recon).epsilon(1e-12));
  }
}

TEST_CASE("sandwich between the scaled and plain Euclidean norms") {
  const NormFamilyParams p = small_params();
  Rng rng(56);
  for (int trial = 0; trial < 200; ++trial) {
    const Vector x = 3.0 * rng.gaussian_vector(p.ambient_dim);
    const double l2 = x.norm();
    for (int n = 1; n <= p.max_index; ++n) {
      const double gauge = gauge_n(p, n, x).value;
      const double fine = norm_fine_n(p, n, x);
      CHECK(gauge >= l2 / (1.0 + 2.0 * p.delta) - 1e-12);
      CHECK(gauge <= l2 * (1.0 + 1e-15) + 1e-15);
      CHECK(fine >= gauge - 1e-15);
      CHECK(fine <= l2 * (1.0 + 1e-15) + 1e-15);
    }
    const UnionNormResult u = norm_union(p, x);
    CHECK(u.value >= l2 / (1.0 + 2.0 * p.delta) - 1e-12);
    CHECK(u.value <= l2 * (1.0 + 1e-15) + 1e-15);
  }
}

TEST_CASE("locality: untouched coordinates leave the gauge Euclidean") {
  const NormFamilyParams p = small_params();
  Rng rng(57);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % p.max_index;
    Vector x = rng.gaussian_vector(p.ambient_dim);
    x[2 * n - 1] = 0.0;  // kill the e_{2n} component
    x[2 * n] = 0.0;      // and e_{2n+1}
    const GaugeResult g = gauge_n(p, n, x);
    CHECK(g.value == x.norm());
    CHECK(g.c1 == 0.0);
    CHECK(g.c2 == 0.0);
  }
}

TEST_CASE("union norm is exact, symmetric, and picks the cheap index") {
  const NormFamilyParams p = small_params();
  Rng rng(58);
  for (int trial = 0; trial < 100; ++trial) {
    const Vector x = 2.0 * rng.gaussian_vector(p.ambient_dim);
    const UnionNormResult u = norm_union(p, x);
    const UnionNormResult neg = norm_union(p, -x);
    CHECK(u.value == neg.value);
    CHECK(u.argmin_n >= 1);
    CHECK(u.argmin_n <= p.max_index);
    CHECK(u.value == doctest::Approx(norm_fine_n(p, u.argmin_n, x)).epsilon(1e-15));
    for (int n = 1; n <= p.max_index; ++n)
      CHECK(u.value <= norm_fine_n(p, n, x) + 1e-15);
  }
  // The special vectors are cheapest at their own index.
  for (int n = 1; n <= p.max_index; ++n) {
    const SpecialVectors sv = special_vectors(p, n);
    CHECK(norm_union(p, sv.z1).argmin_n == n);
  }
  // M = 0 degenerates to the Euclidean norm.
  const NormFamilyParams p0(p.delta, p.mu, 0, 2);
  Vector y(2);
  y << 3.0, 4.0;
  const UnionNormResult u0 = norm_union(p0, y);
  CHECK(u0.value == 5.0);
  CHECK(u0.argmin_n == 0);
}

TEST_CASE("triangle inequality sampled for gauge and union norms") {
  const NormFamilyParams p = small_params();
  Rng rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    const Vector a = 2.0 * rng.gaussian_vector(p.ambient_dim);
    const Vector b = 2.0 * rng.gaussian_vector(p.ambient_dim);
    const int n = 1 + trial % p.max_index;
    CHECK(gauge_n(p, n, a + b).value <=
          gauge_n(p, n, a).value + gauge_n(p, n, b).value + 1e-8);
    CHECK(norm_union(p, a + b).value <=
          norm_union(p, a).value + norm_union(p, b).value + 1e-8);
    // Absolute homogeneity.
    const double s = rng.uniform(-3.0, 3.0);
    CHECK(gauge_n(p, n, s * a).value ==
          doctest::Approx(std::abs(s) * gauge_n(p, n, a).value).epsilon(1e-12));
  }
}

TEST_CASE("slice, separation and claim verifiers respect the stated bounds") {
  const NormFamilyParams p = small_params();
  const double slice_bound = 33.0 * p.mu / (p.delta * p.delta);
  for (const int n : {1, 3})
    for (const int i : {1, 2})
      CHECK(check_slice_lemma(p, n, i, 200, 71) <= slice_bound);
  CHECK(check_separation(p, 1, 2, 200, 72) >= 1.0 - 10.0 * p.delta);
  CHECK(check_separation(p, 1, 3, 200, 73) >= 1.0 - 10.0 * p.delta);
  for (const int n : {1, 3}) {
    CHECK(claim_ball_sup(p, n) ==
          doctest::Approx(std::sqrt(1.0 + p.delta * p.delta / (4.0 * n * n)))
              .epsilon(1e-15));
    const double sup = check_claim_sup(p, n, 1, 300, 74);
    CHECK(sup < 1.0 + p.delta * p.delta / (4.0 * n * n));
    CHECK(sup >= claim_ball_sup(p, n) - 1e-12);
  }
}
