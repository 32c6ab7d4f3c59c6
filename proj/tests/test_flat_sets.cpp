#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "holonet/flat_sets.hpp"
#include "holonet/oracle_kit.hpp"

using namespace holonet;

TEST_CASE("holder profile values and thresholds") {
  const FlatnessProfile p = FlatnessProfile::holder(0.5);
  // alpha = 1/2 gives the ratio 20^{1/(alpha-1)} = 1/400.
  CHECK(r_value(p, 0) == 1.0);
  CHECK(r_value(p, 1) == doctest::Approx(1.0 / 400.0).epsilon(1e-15));
  CHECK(r_value(p, 3) == doctest::Approx(std::pow(400.0, -3.0)).epsilon(1e-14));

  // n(eps) is the first n with r_n <= eps; equality counts.
  CHECK(n_of_eps(p, 2.0) == 0);
  CHECK(n_of_eps(p, 1.0) == 0);
  CHECK(n_of_eps(p, 0.99) == 1);
  CHECK(n_of_eps(p, r_value(p, 1)) == 1);
  CHECK(n_of_eps(p, r_value(p, 7)) == 7);
  CHECK(n_of_eps(p, r_value(p, 7) * 1.0000001) == 7);
  CHECK(n_of_eps(p, r_value(p, 7) * 0.9999999) == 8);
  CHECK_THROWS_AS(n_of_eps(p, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(FlatnessProfile::holder(1.0), std::invalid_argument);
  CHECK_THROWS_AS(FlatnessProfile::holder(0.0), std::invalid_argument);
}

TEST_CASE("explicit profile treats values past the range as zero") {
  const FlatnessProfile p = FlatnessProfile::explicit_values({1.0, 0.25});
  CHECK(r_value(p, 0) == 1.0);
  CHECK(r_value(p, 1) == 0.25);
  CHECK_THROWS_AS(r_value(p, 2), std::out_of_range);
  CHECK(n_of_eps(p, 1.0) == 0);
  CHECK(n_of_eps(p, 0.5) == 1);
  CHECK(n_of_eps(p, 0.25) == 1);
  CHECK(n_of_eps(p, 0.1) == 2);  // sequence past the range is 0
  CHECK_THROWS_AS(FlatnessProfile::explicit_values({0.5, 0.7}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FlatnessProfile::explicit_values({}), std::invalid_argument);
}

TEST_CASE("box coefficients and membership") {
  const FlatSetDescriptor K(SetShape::Box, FlatnessProfile::holder(0.5), 3);
  // c_k = 2^{-k} r_{k-1}.
  CHECK(K.coeffs()[0] == 0.5);
  CHECK(K.coeffs()[1] == doctest::Approx(0.25 / 400.0).epsilon(1e-15));
  Vector x = Vector::Zero(3);
  x[0] = 0.5;
  CHECK(K.contains(x));
  x[0] = 0.5000001;
  CHECK(!K.contains(x));
}

TEST_CASE("box projection is the coordinate clamp") {
  const FlatSetDescriptor K(SetShape::Box, FlatnessProfile::explicit_values({2.0, 1.0}), 2);
  Vector x(2);
  x << 3.0, -0.1;
  const Projection pr = project_onto(K, x);
  CHECK(pr.point[0] == 1.0);
  CHECK(pr.point[1] == -0.1);
  CHECK(pr.distance == doctest::Approx(2.0));
  CHECK(K.contains(pr.point));
  const Projection again = project_onto(K, pr.point);
  CHECK(again.distance == 0.0);
  CHECK((again.point - pr.point).norm() == 0.0);
}

TEST_CASE("weighted l1 projection matches the hull oracle and is idempotent") {
  Rng rng(2024);
  const FlatSetDescriptor K(SetShape::CrossPolytope,
                            FlatnessProfile::explicit_values({1.0, 0.6, 0.2}), 3);
  const Matrix verts = hull_vertices(K);
  for (int trial = 0; trial < 50; ++trial) {
    const Vector x = 2.0 * rng.gaussian_vector(3);
    const Projection pr = project_onto(K, x);
    CHECK(K.contains(pr.point));

    HullProblem prob;
    prob.vertices = verts;
    prob.query = x;
    const MinNormResult ref = min_norm_point(prob);
    CHECK(pr.distance == doctest::Approx(ref.distance).epsilon(1e-7));

    // Exact idempotency: the projected point projects to itself.
    const Projection pr2 = project_onto(K, pr.point);
    CHECK(pr2.distance == 0.0);
  }
}

TEST_CASE("cross-polytope with the query on the vertex axis") {
  // Coefficients (1,1): the set is the standard l1 ball; from (1,1) the
  // nearest point is (1/2,1/2).
  Vector c(2);
  c << 1.0, 1.0;
  Vector x(2);
  x << 1.0, 1.0;
  const Vector y = project_weighted_l1(x, c);
  CHECK(y[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(y[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("zero coefficients pin coordinates") {
  const FlatSetDescriptor K(SetShape::CrossPolytope,
                            FlatnessProfile::explicit_values({1.0, 0.0}), 3);
  Vector x(3);
  x << 0.2, 0.5, -0.5;
  const Projection pr = project_onto(K, x);
  CHECK(pr.point[1] == 0.0);
  CHECK(pr.point[2] == 0.0);
  CHECK(K.contains(pr.point));
}

TEST_CASE("sections zero out trailing coefficients") {
  const FlatSetDescriptor K(SetShape::Box, FlatnessProfile::holder(0.5), 4);
  const FlatSetDescriptor K2 = section(K, 2);
  CHECK(K2.ambient_dim() == 4);
  CHECK(K2.section_dim() == 2);
  CHECK(K2.coeffs()[1] == K.coeffs()[1]);
  CHECK(K2.coeffs()[2] == 0.0);
  Vector x = Vector::Zero(4);
  x[2] = K.coeffs()[2];
  CHECK(K.contains(x));
  CHECK(!K2.contains(x));
  const FlatSetDescriptor K0 = section(K, 0);
  CHECK(K0.contains(Vector::Zero(4)));
  CHECK_THROWS_AS(section(K, 5), std::out_of_range);
}

TEST_CASE("sampled points are members and reach positive distance targets") {
  Rng rng(7);
  for (const SetShape shape : {SetShape::Box, SetShape::CrossPolytope}) {
    const FlatSetDescriptor K(shape, FlatnessProfile::holder(0.6), 5);
    for (int i = 0; i < 100; ++i) CHECK(K.contains(sample_point(K, rng)));
    for (const double target : {1e-4, 1e-2, 0.5}) {
      const Vector x = sample_at_distance(K, target, 2.0, rng);
      CHECK(distance_to(K, x) == doctest::Approx(target).epsilon(1e-10));
    }
  }
  const FlatSetDescriptor K(SetShape::Box, FlatnessProfile::holder(0.5), 3);
  CHECK_THROWS_AS(sample_at_distance(K, -1.0, 2.0, rng), std::invalid_argument);
}

TEST_CASE("height estimates are monotone and certified") {
  for (const SetShape shape : {SetShape::Box, SetShape::CrossPolytope}) {
    const FlatSetDescriptor K(shape, FlatnessProfile::holder(0.5), 6);
    const auto rows = estimate_heights(K, 1500, 11);
    REQUIRE(rows.size() == 7);
    for (std::size_t n = 0; n < rows.size(); ++n) {
      CHECK(rows[n].n == static_cast<int>(n));
      // Lower bound below the profile value: the sets are built to be
      // (r_n)-flat.
      CHECK(rows[n].lower_bound <= r_value(K.profile(), static_cast<int>(n)) + 1e-12);
      if (n > 0) CHECK(rows[n].lower_bound <= rows[n - 1].lower_bound + 1e-15);
    }
    // The distance to the full-dimensional section vanishes.
    CHECK(rows[6].lower_bound == 0.0);
  }
}

TEST_CASE("cross-polytope heights are attained at vertices") {
  // For the cross-polytope the height over E_n is exactly the distance from
  // the (n+1)-st vertex to the section, which estimate_heights samples.
  const FlatSetDescriptor K(SetShape::CrossPolytope,
                            FlatnessProfile::explicit_values({1.0, 0.5, 0.25, 0.1}), 4);
  const auto rows = estimate_heights(K, 800, 3);
  const FlatSetDescriptor S1 = section(K, 1);
  Vector v = Vector::Zero(4);
  v[1] = K.coeffs()[1];  // vertex c_2 e_2
  CHECK(rows[1].lower_bound == doctest::Approx(distance_to(S1, v)).epsilon(1e-9));
}

TEST_CASE("hull vertices enumerate corners and cross vertices") {
  const FlatSetDescriptor B(SetShape::Box, FlatnessProfile::explicit_values({1.0, 0.5}), 2);
  const Matrix bv = hull_vertices(B);
  CHECK(bv.cols() == 4);
  const FlatSetDescriptor C(SetShape::CrossPolytope,
                            FlatnessProfile::explicit_values({1.0, 0.5}), 2);
  const Matrix cv = hull_vertices(C);
  CHECK(cv.cols() == 4);
  for (int j = 0; j < cv.cols(); ++j) CHECK(C.contains(cv.col(j)));
  const FlatSetDescriptor big(SetShape::Box, FlatnessProfile::holder(0.9), 30);
  CHECK_THROWS_AS(hull_vertices(big), std::invalid_argument);
}
