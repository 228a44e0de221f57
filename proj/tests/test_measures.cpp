#include <cmath>

#include "doctest.h"
#include "tsw/measures.hpp"

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
}  // namespace

TEST_CASE("dyadic family and measure") {
  CHECK(dyadic_m(1) == 0);
  CHECK(dyadic_m(2) == 1);
  CHECK(dyadic_m(16) == 2);

  DyadicFamily f2 = DyadicFamily::make(2);
  CHECK(f2.m == 1);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK((f2.vectors[0] - rvec({1, 0})).norm() < 1e-15);
  CHECK((f2.vectors[1] - rvec({s, s})).norm() < 1e-15);

  SymmetricMeasure mu2 = dyadic_measure(2);
  CHECK(mu2.atoms.size() == 4);
  for (double w : mu2.weights) CHECK(w == doctest::Approx(0.25));

  DyadicFamily f16 = DyadicFamily::make(16);
  CHECK(f16.m == 2);
  for (int i = 0; i < 4; ++i)
    CHECK(f16.vectors[2][i].real() == doctest::Approx(0.5));
  for (int i = 4; i < 16; ++i) CHECK(f16.vectors[2][i] == Complex(0, 0));

  SymmetricMeasure mu1 = dyadic_measure(1);
  CHECK(mu1.atoms.size() == 2);
  for (double w : mu1.weights) CHECK(w == doctest::Approx(0.5));

  // Gram identity spot check.
  DyadicFamily f = DyadicFamily::make(4096);
  for (int i = 0; i <= f.m; ++i)
    for (int j = 0; j <= f.m; ++j)
      CHECK(std::abs(inner(f.vectors[i], f.vectors[j]).real() -
                     std::pow(2.0, -std::abs(i - j) / 2.0)) <= 1e-12);
}

TEST_CASE("selberg bound values") {
  std::vector<Vec> ortho = {rvec({1, 0, 0}), rvec({0, 1, 0}), rvec({0, 0, 1})};
  CHECK(selberg_bound(ortho) == doctest::Approx(1.0));

  CHECK(selberg_bound(DyadicFamily::make(2).vectors) ==
        doctest::Approx(1.7071067812).epsilon(1e-9));
  CHECK(selberg_bound(DyadicFamily::make(16).vectors) ==
        doctest::Approx(2.4142135624).epsilon(1e-9));
}

TEST_CASE("selberg inequality on random vectors") {
  DyadicFamily f = DyadicFamily::make(64);
  double s = selberg_bound(f.vectors);
  Rng rng(Seed{23});
  for (int t = 0; t < 500; ++t) {
    Vec v = haar_draw(64, Field::Complex, rng);
    double total = 0.0;
    for (const Vec& e : f.vectors) total += std::norm(inner(v, e));
    CHECK(total <= s + 1e-9);
  }
}

TEST_CASE("psi values and decay") {
  CHECK(psi(1) == doctest::Approx(1.0));
  CHECK(psi(2) == doctest::Approx(0.8535533906).epsilon(1e-9));
  CHECK(psi(16) == doctest::Approx(0.8047378541).epsilon(1e-9));
  for (Eigen::Index d : {2, 8, 64, 512, 4096}) CHECK(psi(d) < 1.0);
}

TEST_CASE("measure risk") {
  auto g2 = GroupPresentation::monomial_full(2);
  TransitiveSet X = TransitiveSet::virtual_set(g2, unit({1, 0}));
  RiskEstimate r = measure_risk(dyadic_measure(2), X);
  CHECK(r.exact);
  CHECK(r.value == doctest::Approx(0.75).epsilon(1e-12));

  // Perfect correlation: mu supported on the set itself.
  UnitVector w0 = unit({0.6, 0.8});
  std::vector<Vec> pts = {w0.coords(), -w0.coords()};
  TransitiveSet Y = TransitiveSet::explicit_set(pts, Field::Real);
  SymmetricMeasure mu =
      SymmetricMeasure::from_atoms(pts, {0.5, 0.5}, Field::Real);
  CHECK(measure_risk(mu, Y).value == doctest::Approx(1.0));

  // Dyadic risk bounded by psi on random virtual Gamma_d sets.
  Rng rng(Seed{31});
  for (Eigen::Index d : {4, 32, 256}) {
    auto g = GroupPresentation::monomial_full(d);
    SymmetricMeasure dy = dyadic_measure(d);
    for (int t = 0; t < 10; ++t) {
      Vec v = haar_draw(d, Field::Complex, rng);
      TransitiveSet Z =
          TransitiveSet::virtual_set(g, UnitVector(v, Field::Complex));
      CHECK(measure_risk(dy, Z).value <= psi(d) + 1e-9);
    }
  }
}

TEST_CASE("haar risk reports an interval") {
  auto g = GroupPresentation::monomial_full(8);
  TransitiveSet X = TransitiveSet::virtual_set(
      g, UnitVector::normalized(rvec({1, 1, 1, 1, 1, 1, 1, 1}), Field::Real));
  SymmetricMeasure mu =
      SymmetricMeasure::haar(8, Field::Complex, Seed{101}, 4000);
  RiskEstimate r = measure_risk(mu, X);
  CHECK_FALSE(r.exact);
  CHECK(r.ci_low <= r.value);
  CHECK(r.value <= r.ci_high);
  CHECK(r.ci_high - r.ci_low < 0.1);
}

TEST_CASE("projected dyadic measure") {
  SymmetricMeasure mu = projected_dyadic_measure(2);
  // e_1 is parallel to the all-ones vector at d=2 and drops out.
  CHECK(mu.atoms.size() == 2);
  const double s = 1.0 / std::sqrt(2.0);
  bool found = false;
  for (const Vec& a : mu.atoms)
    if ((a - rvec({s, -s})).norm() < 1e-12 ||
        (a + rvec({s, -s})).norm() < 1e-12)
      found = true;
  CHECK(found);

  for (Eigen::Index d : {2, 8, 64}) {
    SymmetricMeasure m = projected_dyadic_measure(d);
    double total = 0.0;
    Vec ones = Vec::Ones(d);
    for (std::size_t i = 0; i < m.atoms.size(); ++i) {
      CHECK(std::abs(inner(m.atoms[i], ones)) <= 1e-12);
      CHECK(std::abs(m.atoms[i].norm() - 1.0) <= 1e-12);
      total += m.weights[i];
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("measure symmetry implies zero mean") {
  for (Eigen::Index d : {2, 16, 128}) {
    SymmetricMeasure mu = dyadic_measure(d);
    Vec mean = Vec::Zero(d);
    for (std::size_t i = 0; i < mu.atoms.size(); ++i)
      mean += mu.weights[i] * mu.atoms[i];
    CHECK(mean.norm() <= 1e-9);
  }
}

TEST_CASE("asymmetric atom sets are rejected") {
  std::vector<Vec> atoms = {rvec({1, 0}), rvec({0, 1})};
  CHECK_THROWS_AS(
      SymmetricMeasure::from_atoms(atoms, {0.5, 0.5}, Field::Real),
      InputError);
}

TEST_CASE("combine_reducible") {
  std::vector<Vec> pm1 = {rvec({1}), rvec({-1})};
  SymmetricMeasure mu1 =
      SymmetricMeasure::from_atoms(pm1, {0.5, 0.5}, Field::Real);
  Mat embed1(2, 1), embed2(2, 1);
  embed1 << 1, 0;
  embed2 << 0, 1;
  SymmetricMeasure combined =
      combine_reducible(mu1, mu1, 1.0, 1.0, embed1, embed2);
  CHECK(combined.atoms.size() == 4);
  const double s = 1.0 / std::sqrt(2.0);
  for (const Vec& a : combined.atoms) {
    CHECK(std::abs(std::abs(a[0].real()) - s) < 1e-12);
    CHECK(std::abs(std::abs(a[1].real()) - s) < 1e-12);
  }

  // Risk of the combined measure on the sign-flip orbit of e_1 is exactly
  // lambda_1^2 = 1/2, matching f1 f2 / sqrt(f1^2 + f2^2) squared at f = 1.
  Mat diag_flip = Mat::Identity(2, 2);
  diag_flip(1, 1) = -1;
  auto flips = GroupPresentation::explicit_group(
      2, Field::Real, {(-Mat::Identity(2, 2)).eval(), diag_flip});
  TransitiveSet X = orbit_enumerate(flips, unit({1, 0}), 10);
  CHECK(measure_risk(combined, X).value == doctest::Approx(0.5).epsilon(1e-12));

  // Non-orthogonal images are rejected.
  Mat bad(2, 1);
  bad << 1, 0;
  CHECK_THROWS_AS(combine_reducible(mu1, mu1, 1.0, 1.0, embed1, bad),
                  NonOrthogonalSubspaces);
}

TEST_CASE("combine_imprimitive recovers the dyadic measure") {
  const Eigen::Index d = 4;
  std::vector<Vec> pm1;
  Vec e1 = Vec::Zero(d);
  e1[0] = 1.0;
  pm1 = {e1, -e1};
  SymmetricMeasure mu1 =
      SymmetricMeasure::from_atoms(pm1, {0.5, 0.5}, Field::Real);
  SymmetricMeasure mu2 = dyadic_measure(d);
  std::vector<Mat> gammas;
  for (Eigen::Index i = 0; i < d; ++i) {
    Mat g = Mat::Identity(d, d);
    if (i > 0) {
      g(0, 0) = g(i, i) = 0.0;
      g(0, i) = g(i, 0) = 1.0;
    }
    gammas.push_back(g);
  }
  SymmetricMeasure out = combine_imprimitive(mu1, mu2, gammas);
  CHECK(out.atoms.size() == mu1.atoms.size() * mu2.atoms.size());
  for (const Vec& a : out.atoms) {
    CHECK(std::abs(a.norm() - 1.0) <= 1e-12);
    // Every output atom is (a sign of) a dyadic atom.
    bool matches = false;
    for (const Vec& e : mu2.atoms)
      if ((a - e).norm() < 1e-12 || (a + e).norm() < 1e-12) matches = true;
    CHECK(matches);
  }
}

TEST_CASE("eta calculus") {
  CHECK(eta(1.0) == doctest::Approx(1.0));
  CHECK(eta(2.0) == doctest::Approx(0.7071067812).epsilon(1e-9));
  CHECK_THROWS_AS(eta(0.5), DomainError);

  // Combined-value identity.
  EtaParams params;
  for (double x : {1.0, 3.0, 100.0})
    for (double y : {1.0, 7.0, 1e4}) {
      double ex = eta(x), ey = eta(y);
      double lhs = ex * ey / std::sqrt(ex * ex + ey * ey);
      double rhs =
          1.0 / std::sqrt(2.0 + params.c * std::log(x) + params.c * std::log(y));
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }

  std::vector<std::pair<double, double>> grid;
  for (double x : {1.0, 2.0, 10.0, 1e3})
    for (double y : {1.0, 2.0, 10.0, 1e3}) grid.emplace_back(x, y);
  EtaCheckReport rep = eta_inequalities_check(params, grid);
  CHECK(rep.all_hold(1e-12));
  CHECK(rep.argmin_sum.first == doctest::Approx(1.0));
  CHECK(rep.argmin_sum.second == doctest::Approx(1.0));
  CHECK(std::abs(rep.min_margin_sum) <= 1e-12);

  // Equality in the product inequality along x = 1.
  double margin = eta(1.0) * eta(7.0) - eta(7.0);
  CHECK(std::abs(margin) <= 1e-15);

  EtaParams bad;
  bad.c = 2.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("haar witness finds the orthogonal direction") {
  std::vector<Vec> pts = {rvec({1, 0}), rvec({-1, 0})};
  TransitiveSet X = TransitiveSet::explicit_set(pts, Field::Real);
  auto [w, value] = haar_witness(X, 3000, Seed{77});
  CHECK(value < 0.05);
  CHECK(std::abs(w.coords()[1]) > 0.99);
}
