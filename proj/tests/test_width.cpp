#include <cmath>

#include "doctest.h"
#include "tsw/measures.hpp"
#include "tsw/sweep.hpp"
#include "tsw/width.hpp"

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

TransitiveSet basis_orbit(Eigen::Index d) {
  std::vector<Vec> pts;
  for (Eigen::Index i = 0; i < d; ++i) {
    Vec e = Vec::Zero(d);
    e[i] = 1.0;
    pts.push_back(e);
  }
  return TransitiveSet::explicit_set(pts, Field::Real);
}
}  // namespace

TEST_CASE("square orbit width report") {
  SolverConfig cfg;
  cfg.seed = Seed{1};
  WidthReport rep = width_report(square_orbit(), cfg);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(rep.upper == doctest::Approx(s).epsilon(1e-6));
  CHECK(rep.lower == doctest::Approx(s).epsilon(1e-5));
  CHECK(rep.lower <= rep.upper);
  CHECK(rep.certificate == LowerCertificate::Sweep2d);
  CHECK(sup_correlation(square_orbit(), rep.witness) ==
        doctest::Approx(rep.upper).epsilon(1e-9));
}

TEST_CASE("basis orbit widths") {
  SolverConfig cfg;
  cfg.seed = Seed{2};
  for (Eigen::Index d : {2, 3, 4, 6}) {
    TransitiveSet X = basis_orbit(d);
    auto [w, value] = width_upper(X, cfg);
    CHECK(value == doctest::Approx(1.0 / std::sqrt(double(d))).epsilon(1e-6));
    CHECK(width_lower_eig(X) ==
          doctest::Approx(1.0 / std::sqrt(double(d))).epsilon(1e-12));
  }
}

TEST_CASE("eig certificate degenerates on proper subspaces") {
  std::vector<Vec> pts = {rvec({1, 0, 0}), rvec({-1, 0, 0}), rvec({0, 1, 0}),
                          rvec({0, -1, 0})};
  TransitiveSet X = TransitiveSet::explicit_set(pts, Field::Real);
  CHECK(width_lower_eig(X) <= 1e-12);
}

TEST_CASE("exact monomial width") {
  auto g = GroupPresentation::monomial_full(4);

  auto [v1, w1] =
      width_exact_monomial(TransitiveSet::virtual_set(g, unit({1, 0, 0, 0})));
  CHECK(v1 == doctest::Approx(0.5).epsilon(1e-12));

  auto [v2, w2] =
      width_exact_monomial(TransitiveSet::virtual_set(g, unit({1, 1, 1, 1})));
  CHECK(v2 == doctest::Approx(0.5).epsilon(1e-12));

  auto [v3, w3] = width_exact_monomial(sharpness_set(4));
  CHECK(v3 == doctest::Approx(std::sqrt(12.0 / 25.0)).epsilon(1e-12));

  std::vector<Vec> pts = {rvec({1, 0}), rvec({-1, 0})};
  CHECK_THROWS_AS(
      width_exact_monomial(TransitiveSet::explicit_set(pts, Field::Real)),
      WrongKind);
}

TEST_CASE("prefix witness reproduces the exact value") {
  auto g = GroupPresentation::monomial_full(5);
  TransitiveSet X =
      TransitiveSet::virtual_set(g, unit({0.9, 0.5, 0.3, 0.2, 0.1}));
  auto [value, witness] = width_exact_monomial(X);
  CHECK(sup_correlation(X, witness) == doctest::Approx(value).epsilon(1e-12));
}

TEST_CASE("real witness from complex") {
  std::vector<Vec> pts = {rvec({1, 0}), rvec({-1, 0})};
  TransitiveSet X = TransitiveSet::explicit_set(pts, Field::Real);

  UnitVector wr = unit({0.6, 0.8});
  UnitVector got = real_witness_from_complex(wr, X);
  CHECK((got.coords() - wr.coords()).norm() < 1e-12);

  Vec wi(2);
  wi << Complex(0, 1), Complex(0, 0);
  UnitVector got2 =
      real_witness_from_complex(UnitVector(wi, Field::Complex), X);
  CHECK(std::abs(std::abs(got2.coords()[0].real()) - 1.0) < 1e-12);

  // Extremal case of the sqrt(2) guarantee.
  Vec wc(2);
  const double s = 1.0 / std::sqrt(2.0);
  wc << Complex(s, 0), Complex(0, s);
  UnitVector wcu(wc, Field::Complex);
  UnitVector real_w = real_witness_from_complex(wcu, X);
  double complex_sup = sup_correlation(X, wcu);
  double real_sup = sup_correlation(X, real_w);
  CHECK(complex_sup == doctest::Approx(s).epsilon(1e-12));
  CHECK(real_sup == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(real_sup <= std::sqrt(2.0) * complex_sup + 1e-9);
}

TEST_CASE("singleton orbit has vanishing width") {
  std::vector<Vec> pts = {rvec({0.6, 0.8, 0}), rvec({-0.6, -0.8, 0})};
  TransitiveSet X = TransitiveSet::explicit_set(pts, Field::Real);
  SolverConfig cfg;
  cfg.seed = Seed{3};
  WidthReport rep = width_report(X, cfg);
  CHECK(rep.upper < 1e-4);
  CHECK(rep.lower <= 1e-12);
}

TEST_CASE("sharpness report at moderate dimension") {
  SolverConfig cfg;
  cfg.seed = Seed{4};
  WidthReport rep = width_report(sharpness_set(256), cfg);
  double h = 0.0;
  for (int i = 1; i <= 256; ++i) h += 1.0 / i;
  CHECK(rep.lower == doctest::Approx(1.0 / std::sqrt(h)).epsilon(1e-9));
  CHECK(rep.lower == doctest::Approx(0.4041).epsilon(1e-3));
  CHECK(rep.upper <= std::sqrt(psi(256)) + 1e-12);
  CHECK(rep.certificate == LowerCertificate::PrefixFlat);
  CHECK(rep.lower <= rep.upper);
}

TEST_CASE("monotonicity of the objective in the point set") {
  Rng rng(Seed{5});
  UnitVector w(haar_draw(3, Field::Real, rng), Field::Real);
  std::vector<Vec> pts = {rvec({1, 0, 0}), rvec({-1, 0, 0})};
  TransitiveSet small = TransitiveSet::explicit_set(pts, Field::Real);
  pts.push_back(rvec({0, 1, 0}));
  pts.push_back(rvec({0, -1, 0}));
  TransitiveSet big = TransitiveSet::explicit_set(pts, Field::Real);
  CHECK(sup_correlation(small, w) <= sup_correlation(big, w) + 1e-15);
}

TEST_CASE("solver determinism") {
  SolverConfig cfg;
  cfg.seed = Seed{6};
  TransitiveSet X = basis_orbit(3);
  auto [w1, v1] = width_upper(X, cfg);
  auto [w2, v2] = width_upper(X, cfg);
  CHECK(v1 == v2);
  CHECK((w1.coords() - w2.coords()).norm() == 0.0);
}

TEST_CASE("sweep2d step bound") {
  Sweep2dResult r = sweep2d(square_orbit(), 100000);
  CHECK(r.value == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-6));
  CHECK(r.step > 0.0);
  CHECK(r.value - r.step <= 1.0 / std::sqrt(2.0));
}
