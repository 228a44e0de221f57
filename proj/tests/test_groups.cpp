#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "tsw/decompose.hpp"
#include "tsw/groups.hpp"

using namespace tsw;

namespace {
Vec rvec(std::initializer_list<double> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = Complex(x, 0.0);
  return v;
}

UnitVector unit(std::initializer_list<double> xs) {
  return UnitVector::normalized(rvec(xs), Field::Real);
}

bool orbit_contains(const TransitiveSet& X, const Vec& p) {
  for (const Vec& q : X.points())
    if ((q - p).norm() < 1e-9) return true;
  return false;
}
}  // namespace

TEST_CASE("orbit of the 90-degree rotation") {
  Mat rot(2, 2);
  rot << 0, -1, 1, 0;
  auto g = GroupPresentation::explicit_group(2, Field::Real, {rot});
  TransitiveSet X = orbit_enumerate(g, unit({1, 0}), 100);
  CHECK(X.points().size() == 4);
  CHECK(orbit_contains(X, rvec({1, 0})));
  CHECK(orbit_contains(X, rvec({0, 1})));
  CHECK(orbit_contains(X, rvec({-1, 0})));
  CHECK(orbit_contains(X, rvec({0, -1})));
}

TEST_CASE("coordinate orbit under S_3") {
  auto g = GroupPresentation::permutation(3);
  TransitiveSet X = orbit_enumerate(g, unit({1, 0, 0}), 100);
  CHECK(X.points().size() == 3);
  for (int i = 0; i < 3; ++i) {
    Vec e = Vec::Zero(3);
    e[i] = 1.0;
    CHECK(orbit_contains(X, e));
  }
}

TEST_CASE("signed permutation orbit at d=2") {
  auto g = GroupPresentation::signed_permutation(2);
  TransitiveSet X = orbit_enumerate(g, unit({1, 1}), 100);
  CHECK(X.points().size() == 4);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(orbit_contains(X, rvec({s, -s})));
  CHECK(orbit_contains(X, rvec({-s, -s})));
}

TEST_CASE("orbit closure under the generators") {
  auto g = GroupPresentation::signed_permutation(3);
  TransitiveSet X = orbit_enumerate(g, unit({3, 2, 1}), 100);
  CHECK(X.points().size() == 48);
  for (const Mat& m : g.generator_matrices())
    for (const Vec& p : X.points()) CHECK(orbit_contains(X, m * p));
}

TEST_CASE("orbit overflow") {
  auto g = GroupPresentation::signed_permutation(4);
  CHECK_THROWS_AS(orbit_enumerate(g, unit({4, 3, 2, 1}), 10), OrbitOverflow);
}

TEST_CASE("sup_correlation explicit and virtual") {
  // Square orbit contains the witness.
  std::vector<Vec> sq = {rvec({1, 0}), rvec({0, 1}), rvec({-1, 0}),
                         rvec({0, -1})};
  TransitiveSet square = TransitiveSet::explicit_set(sq, Field::Real);
  CHECK(sup_correlation(square, unit({1, 0})) == doctest::Approx(1.0));

  // Virtual Gamma_3, v = e_1.
  auto g3 = GroupPresentation::monomial_full(3);
  TransitiveSet X3 = TransitiveSet::virtual_set(g3, unit({1, 0, 0}));
  CHECK(sup_correlation(X3, unit({0.6, 0.8, 0.0})) ==
        doctest::Approx(0.8).epsilon(1e-12));

  // Cross-check against the 48-element signed-permutation orbit at d=3:
  // the seed e_1 has one nonzero coordinate, so phases beyond signs change
  // nothing and the finite enumeration already attains the sup.
  auto sg = GroupPresentation::signed_permutation(3);
  TransitiveSet orb = orbit_enumerate(sg, unit({1, 0, 0}), 100);
  CHECK(sup_correlation(orb, unit({0.6, 0.8, 0.0})) ==
        doctest::Approx(0.8).epsilon(1e-12));

  // Virtual Gamma_2, v = (1,1)/sqrt 2.
  auto g2 = GroupPresentation::monomial_full(2);
  TransitiveSet X2 = TransitiveSet::virtual_set(g2, unit({1, 1}));
  CHECK(sup_correlation(X2, unit({1, 0})) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("virtual explicit-generator sets must be enumerated first") {
  Mat rot(2, 2);
  rot << 0, -1, 1, 0;
  auto g = GroupPresentation::explicit_group(2, Field::Real, {rot});
  TransitiveSet X = TransitiveSet::virtual_set(g, unit({1, 0}));
  CHECK_THROWS_AS(sup_correlation(X, unit({1, 0})), UnsupportedVirtual);
}

TEST_CASE("sup_correlation is invariant under group images of the witness") {
  auto g = GroupPresentation::signed_permutation(4);
  TransitiveSet X = TransitiveSet::virtual_set(g, unit({4, 3, 2, 1}));
  UnitVector w = unit({0.1, -0.7, 0.5, 0.2});
  double base = sup_correlation(X, w);
  Vec moved(4);
  moved << w.coords()[2], -w.coords()[0], w.coords()[3], -w.coords()[1];
  CHECK(sup_correlation(X, UnitVector(moved, Field::Real)) ==
        doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("sorted_profile") {
  auto g = GroupPresentation::monomial_full(4);
  TransitiveSet X = TransitiveSet::virtual_set(g, unit({0, 0, 1, 0}));
  RealVec p = sorted_profile(X);
  CHECK(p[0] == 1.0);
  CHECK(p[3] == 0.0);

  TransitiveSet U = TransitiveSet::virtual_set(g, unit({1, 1, 1, 1}));
  RealVec q = sorted_profile(U);
  for (int i = 0; i < 4; ++i) CHECK(q[i] == doctest::Approx(0.5));

  std::vector<Vec> pts = {rvec({1, 0}), rvec({-1, 0})};
  TransitiveSet E = TransitiveSet::explicit_set(pts, Field::Real);
  CHECK_THROWS_AS(sorted_profile(E), WrongKind);
}

TEST_CASE("sharpness set") {
  TransitiveSet s1 = sharpness_set(1);
  CHECK(s1.seed_vector().coords()[0].real() == doctest::Approx(1.0));

  TransitiveSet s2 = sharpness_set(2);
  CHECK(s2.seed_vector().coords()[0].real() ==
        doctest::Approx(0.8164965809).epsilon(1e-9));
  CHECK(s2.seed_vector().coords()[1].real() ==
        doctest::Approx(0.5773502692).epsilon(1e-9));

  TransitiveSet s4 = sharpness_set(4);
  CHECK(std::abs(s4.seed_vector().coords().norm() - 1.0) < 1e-14);
  const double h4 = 25.0 / 12.0;
  RealVec p = sorted_profile(s4);
  CHECK(p[0] == doctest::Approx(1.0 / std::sqrt(h4)).epsilon(1e-12));
  CHECK(p[1] == doctest::Approx(1.0 / std::sqrt(2.0 * h4)).epsilon(1e-12));
  CHECK(p[3] == doctest::Approx(0.5 / std::sqrt(h4)).epsilon(1e-12));
}

TEST_CASE("max_signed_abs_sum against brute force") {
  Rng rng(Seed{17});
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> z;
    int n = 1 + int(rng.uniform() * 6);
    for (int i = 0; i < n; ++i) z.push_back(rng.complex_gaussian());
    double exact = max_signed_abs_sum(z);
    double brute = 0.0;
    for (int mask = 0; mask < (1 << n); ++mask) {
      Complex sum = 0.0;
      for (int i = 0; i < n; ++i) sum += ((mask >> i) & 1) ? z[i] : -z[i];
      brute = std::max(brute, std::abs(sum));
    }
    CHECK(exact == doctest::Approx(brute).epsilon(1e-10));
  }
}

TEST_CASE("explicit generators must be isometries") {
  Mat bad(2, 2);
  bad << 1, 1, 0, 1;
  CHECK_THROWS_AS(GroupPresentation::explicit_group(2, Field::Real, {bad}),
                  NonIsometry);
}
