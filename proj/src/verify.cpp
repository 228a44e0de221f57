#include "tsw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "tsw/decompose.hpp"
#include "tsw/groups.hpp"
#include "tsw/measures.hpp"
#include "tsw/sweep.hpp"
#include "tsw/width.hpp"

namespace tsw {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

CheckResult check_gram() {
  CheckResult r{"gram: <e_i,e_j> = 2^{-|i-j|/2} up to d = 2^20", false, kInf,
                ""};
  double max_dev = 0.0;
  for (Eigen::Index d : {2L, 4L, 16L, 256L, 4096L, 1L << 20}) {
    DyadicFamily fam = DyadicFamily::make(d);
    for (int i = 0; i <= fam.m; ++i)
      for (int j = 0; j <= fam.m; ++j) {
        double expect = std::pow(2.0, -0.5 * std::abs(i - j));
        double got = std::abs(inner(fam.vectors[i], fam.vectors[j]));
        max_dev = std::max(max_dev, std::abs(got - expect));
      }
  }
  r.margin = 1e-12 - max_dev;
  r.passed = max_dev <= 1e-12;
  r.detail = "max deviation " + format(max_dev);
  return r;
}

CheckResult check_selberg(Seed seed) {
  CheckResult r{"selberg: sum |<v,e_i>|^2 <= max-row bound", false, kInf, ""};
  Rng rng = Rng(seed).stream(2);
  std::size_t violations = 0;
  for (Eigen::Index d : {2, 16, 256, 4096}) {
    DyadicFamily fam = DyadicFamily::make(d);
    double bound = selberg_bound(fam.vectors);
    for (int k = 0; k < 10000; ++k) {
      Vec v = haar_draw(d, Field::Complex, rng);
      double total = 0.0;
      for (const Vec& e : fam.vectors) {
        double a = std::abs(inner(v, e));
        total += a * a;
      }
      double margin = bound + 1e-9 - total;
      r.margin = std::min(r.margin, margin);
      if (margin < 0) ++violations;
    }
  }
  r.passed = violations == 0;
  r.detail = std::to_string(violations) + " violations, min margin " +
             format(r.margin);
  return r;
}

CheckResult check_risk_psi(Seed seed) {
  CheckResult r{"dyadic risk <= psi(d); psi decay bounds", false, kInf, ""};
  Rng rng = Rng(seed).stream(3);
  for (Eigen::Index d = 2; d <= 4096; d *= 2) {
    SymmetricMeasure mu = dyadic_measure(d);
    double bound = psi(d);
    for (int k = 0; k < 100; ++k) {
      Vec v = haar_draw(d, Field::Complex, rng);
      TransitiveSet X = TransitiveSet::virtual_set(
          GroupPresentation::monomial_full(d), UnitVector(v, Field::Complex));
      double risk = measure_risk(mu, X).value;
      r.margin = std::min(r.margin, bound + 1e-9 - risk);
    }
  }
  bool risk_ok = r.margin >= 0;
  const double decay_const = 2.0 * (3.0 + 2.0 * std::sqrt(2.0)) * std::log(2.0);
  double worst_decay = kInf, worst_unit = kInf;
  for (Eigen::Index d = 2; d <= 1000000; ++d) {
    double p = psi(d);
    worst_unit = std::min(worst_unit, 1.0 - p);
    worst_decay = std::min(worst_decay, decay_const / std::log(double(d)) - p);
  }
  r.margin = std::min({r.margin, worst_decay, worst_unit});
  r.passed = risk_ok && worst_unit > 0 && worst_decay >= 0;
  r.detail = "min margins: risk " + format(r.margin) + ", psi<1 " +
             format(worst_unit) + ", decay " + format(worst_decay);
  return r;
}

CheckResult check_sharpness(Seed seed) {
  CheckResult r{"sharpness: lower = 1/sqrt(H_d), upper <= sqrt(psi(d))",
                false, kInf, ""};
  double worst_ratio = 0.0;
  for (Eigen::Index d : {2, 4, 16, 64, 256, 1024, 4096}) {
    SolverConfig cfg;
    cfg.seed = Seed{seed.value + std::uint64_t(d)};
    WidthReport rep = width_report(sharpness_set(d), cfg);
    double harmonic = 0.0;
    for (Eigen::Index i = 1; i <= d; ++i) harmonic += 1.0 / double(i);
    double floor = 1.0 / std::sqrt(harmonic);
    double lower_dev = std::abs(rep.lower - floor);
    double psi_margin = std::sqrt(psi(d)) - rep.upper;
    worst_ratio = std::max(worst_ratio, rep.upper / rep.lower);
    r.margin = std::min({r.margin, 1e-9 - lower_dev, psi_margin});
  }
  r.margin = std::min(r.margin, 4.0 - worst_ratio);
  r.passed = r.margin >= 0;
  r.detail = "min margin " + format(r.margin) + ", worst upper/lower ratio " +
             format(worst_ratio);
  return r;
}

CheckResult check_small_widths(Seed seed) {
  CheckResult r{"exact small widths: square, basis, hypercube", false, kInf,
                ""};
  SolverConfig cfg;
  cfg.seed = seed;
  // Square orbit vs the angle-sweep oracle.
  TransitiveSet sq = square_orbit();
  WidthReport sq_rep = width_report(sq, cfg);
  double oracle = sweep2d(sq).value;
  double target = 1.0 / std::sqrt(2.0);
  r.margin = std::min(r.margin, 1e-6 - std::abs(sq_rep.upper - target));
  r.margin = std::min(r.margin, 1e-6 - std::abs(oracle - target));
  r.margin = std::min(r.margin, 1e-5 - (sq_rep.upper - sq_rep.lower));
  // Basis orbits, explicit, with the eigenvalue certificate.
  for (Eigen::Index d = 2; d <= 9; ++d) {
    std::vector<Vec> pts;
    for (Eigen::Index i = 0; i < d; ++i) {
      Vec e = Vec::Zero(d);
      e[i] = 1.0;
      pts.push_back(std::move(e));
    }
    TransitiveSet X = TransitiveSet::explicit_set(std::move(pts), Field::Real);
    WidthReport rep = width_report(X, cfg);
    double t = 1.0 / std::sqrt(double(d));
    r.margin = std::min(r.margin, 1e-6 - std::abs(rep.upper - t));
    r.margin = std::min(r.margin, 1e-6 - std::abs(rep.lower - t));
    r.margin = std::min(r.margin, 1e-5 - (rep.upper - rep.lower));
  }
  // Hypercube orbits via the virtual signed-permutation closed form.
  for (Eigen::Index d = 2; d <= 16; ++d) {
    WidthReport rep = width_report(make_family_set("hypercube", d), cfg);
    double t = 1.0 / std::sqrt(double(d));
    r.margin = std::min(r.margin, 1e-6 - std::abs(rep.upper - t));
    r.margin = std::min(r.margin, 1e-6 - std::abs(rep.lower - t));
    r.margin = std::min(r.margin, 1e-5 - (rep.upper - rep.lower));
  }
  r.passed = r.margin >= 0;
  r.detail = "min margin " + format(r.margin);
  return r;
}

CheckResult check_prefix_oracle(Seed seed) {
  CheckResult r{"prefix-flat formula vs randomized brute force", false, kInf,
                ""};
  Rng rng = Rng(seed).stream(6);
  double worst_gap = 0.0;  // brute - exact, should stay within 1e-4
  double worst_soundness = kInf;  // brute + 1e-9 - exact, must stay >= 0
  for (int trial = 0; trial < 200; ++trial) {
    Eigen::Index d = 2 + Eigen::Index(rng.uniform() * 5);  // 2..6
    Vec raw = haar_draw(d, Field::Complex, rng);
    RealVec p = sorted_abs(raw);
    Vec seed_vec(d);
    for (Eigen::Index i = 0; i < d; ++i) seed_vec[i] = p[i];
    TransitiveSet X = TransitiveSet::virtual_set(
        GroupPresentation::monomial_full(d),
        UnitVector(seed_vec, Field::Complex));
    double exact = width_exact_monomial(X).first;
    auto objective = [&](const Vec& w) { return p.dot(sorted_abs(w)); };
    double brute = kInf;
    Vec best_w;
    for (int k = 0; k < 100000; ++k) {
      Vec w = haar_draw(d, Field::Real, rng);
      double f = objective(w);
      if (f < brute) {
        brute = f;
        best_w = w;
      }
    }
    double radius = 0.3;
    while (radius > 1e-9) {
      bool improved = false;
      for (int k = 0; k < 64; ++k) {
        Vec cand = (best_w + radius * haar_draw(d, Field::Real, rng))
                       .normalized();
        double f = objective(cand);
        if (f < brute - 1e-15) {
          brute = f;
          best_w = cand;
          improved = true;
        }
      }
      if (!improved) radius *= 0.5;
    }
    worst_soundness = std::min(worst_soundness, brute + 1e-9 - exact);
    worst_gap = std::max(worst_gap, brute - exact);
  }
  r.margin = std::min(worst_soundness, 1e-4 - worst_gap);
  r.passed = r.margin >= 0;
  r.detail = "soundness margin " + format(worst_soundness) +
             ", largest brute-force excess " + format(worst_gap);
  return r;
}

CheckResult check_eta() {
  CheckResult r{"eta calculus on [1,1e6]^2 log grid", false, kInf, ""};
  EtaParams params;  // c = 1/ln 2
  std::vector<std::pair<double, double>> grid;
  for (int i = 0; i < 100; ++i)
    for (int j = 0; j < 100; ++j)
      grid.emplace_back(std::pow(10.0, 6.0 * i / 99.0),
                        std::pow(10.0, 6.0 * j / 99.0));
  EtaCheckReport rep = eta_inequalities_check(params, grid);
  double e1 = eta(1.0, params), e2 = eta(2.0, params);
  double equality_at_11 = std::abs(e2 - e1 * e1 / std::sqrt(2.0 * e1 * e1));
  r.margin = std::min(rep.min_margin_sum, rep.min_margin_product);
  r.passed = r.margin >= -1e-12 && equality_at_11 <= 1e-12;
  r.detail = "min margins " + format(rep.min_margin_sum) + " / " +
             format(rep.min_margin_product) + ", |equality at (1,1)| = " +
             format(equality_at_11);
  return r;
}

CheckResult check_cap(Seed seed) {
  CheckResult r{"cap tail: P(|<v,w>| > t) <= 2 exp(-t^2 d / 2)", false, kInf,
                ""};
  const std::size_t n = 100000;
  struct Case {
    Eigen::Index d;
    double t;
  };
  for (Case c : {Case{50, 0.3}, Case{100, 0.3}, Case{200, 0.25}}) {
    Rng rng = Rng(seed).stream(8000 + std::uint64_t(c.d));
    Vec v = Vec::Zero(c.d);
    v[0] = 1.0;
    std::size_t hits = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Vec w = haar_draw(c.d, Field::Complex, rng);
      if (std::abs(inner(v, w)) > c.t) ++hits;
    }
    double p_hat = double(hits) / double(n);
    double slack = 3.0 * std::sqrt(p_hat * (1.0 - p_hat) / double(n));
    double bound = 2.0 * std::exp(-c.t * c.t * double(c.d) / 2.0);
    r.margin = std::min(r.margin, bound + slack - p_hat);
  }
  r.passed = r.margin >= 0;
  r.detail = "min margin " + format(r.margin);
  return r;
}

CheckResult check_combine(Seed seed) {
  CheckResult r{"combination rules: reducible 1+1 and coordinate lines",
                false, kInf, ""};
  // Reducible 1 (+) 1: product of the two symmetric sign measures.
  Vec plus1(1), minus1(1);
  plus1[0] = 1.0;
  minus1[0] = -1.0;
  SymmetricMeasure sign_measure = SymmetricMeasure::from_atoms(
      {plus1, minus1}, {0.5, 0.5}, Field::Real);
  Mat embed1 = Mat::Zero(2, 1), embed2 = Mat::Zero(2, 1);
  embed1(0, 0) = 1.0;
  embed2(1, 0) = 1.0;
  SymmetricMeasure combined = combine_reducible(sign_measure, sign_measure,
                                                1.0, 1.0, embed1, embed2);
  Vec e1 = Vec::Zero(2);
  e1[0] = 1.0;
  TransitiveSet X = TransitiveSet::explicit_set({e1, -e1}, Field::Real);
  double risk = measure_risk(combined, X).value;
  double bound = 1.0 / std::sqrt(2.0);  // f1 f2 / sqrt(f1^2 + f2^2)
  r.margin = 1e-12 - std::abs(risk - bound * bound);
  // Imprimitive coordinate-line test: recovers the dyadic measure, so its
  // risk against Gamma_d orbits stays within psi(d).
  Rng rng = Rng(seed).stream(9);
  for (Eigen::Index d : {4, 16}) {
    Vec base_plus = Vec::Zero(d), base_minus = Vec::Zero(d);
    base_plus[0] = 1.0;
    base_minus[0] = -1.0;
    SymmetricMeasure mu1 = SymmetricMeasure::from_atoms(
        {base_plus, base_minus}, {0.5, 0.5}, Field::Real);
    std::vector<Mat> gammas;
    for (Eigen::Index i = 0; i < d; ++i) {
      Mat g = Mat::Identity(d, d);
      if (i != 0) {
        g(0, 0) = g(i, i) = 0.0;
        g(0, i) = g(i, 0) = 1.0;
      }
      gammas.push_back(std::move(g));
    }
    SymmetricMeasure lifted =
        combine_imprimitive(mu1, dyadic_measure(d), gammas);
    double bound_d = psi(d);
    for (int k = 0; k < 25; ++k) {
      Vec v = haar_draw(d, Field::Complex, rng);
      TransitiveSet orbit = TransitiveSet::virtual_set(
          GroupPresentation::monomial_full(d), UnitVector(v, Field::Complex));
      double risk_d = measure_risk(lifted, orbit).value;
      r.margin = std::min(r.margin, bound_d + 1e-9 - risk_d);
    }
  }
  r.passed = r.margin >= 0;
  r.detail = "reducible risk " + format(risk) + ", min margin " +
             format(r.margin);
  return r;
}

CheckResult check_decompose(Seed seed) {
  CheckResult r{"decomposition: S_3/S_5 split {1, d-1}; imprimitivity checks",
                false, kInf, ""};
  bool ok = true;
  std::ostringstream detail;
  for (Eigen::Index d : {3, 5}) {
    GroupPresentation sym = GroupPresentation::permutation(d);
    GroupPresentation g = GroupPresentation::explicit_group(
        d, Field::Real, sym.generator_matrices());
    SubspaceDecomposition dec =
        reynolds_invariant_subspaces(g, Seed{seed.value + std::uint64_t(d)});
    auto dims = dec.dims();
    std::sort(dims.begin(), dims.end());
    bool dims_ok =
        dims.size() == 2 && dims[0] == 1 && dims[1] == d - 1;
    ok = ok && dims_ok;
    double worst_comm = 0.0;
    for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
      Mat p = dec.projector(b);
      for (const Mat& gen : g.generator_matrices())
        worst_comm = std::max(worst_comm, max_abs(gen * p - p * gen));
    }
    r.margin = std::min(r.margin, 1e-8 - worst_comm);
    detail << "d=" << d << " dims {" << dims[0] << "," << dims.back()
           << "} comm " << format(worst_comm) << "; ";
  }
  // Coordinate lines under the signed-permutation group: valid.
  {
    Eigen::Index d = 3;
    ImprimitivitySystem sys;
    for (Eigen::Index i = 0; i < d; ++i) {
      Mat b = Mat::Zero(d, 1);
      b(i, 0) = 1.0;
      sys.blocks.blocks.push_back(std::move(b));
    }
    for (Eigen::Index i = 0; i < d; ++i) {
      Mat g = Mat::Identity(d, d);
      if (i != 0) {
        g(0, 0) = g(i, i) = 0.0;
        g(0, i) = g(i, 0) = 1.0;
      }
      sys.coset_maps.push_back(std::move(g));
    }
    try {
      validate_imprimitivity(sys, GroupPresentation::signed_permutation(d));
      detail << "coordinate lines accepted; ";
    } catch (const NotASystem&) {
      ok = false;
      detail << "coordinate lines REJECTED; ";
    }
  }
  // Non-orthogonal counterexample: must be rejected.
  {
    ImprimitivitySystem sys;
    Mat b1 = Mat::Zero(2, 1), b2 = Mat::Zero(2, 1);
    b1(0, 0) = 1.0;
    b2(0, 0) = b2(1, 0) = 1.0 / std::sqrt(2.0);
    sys.blocks.blocks = {b1, b2};
    try {
      validate_imprimitivity(sys, GroupPresentation::permutation(2));
      ok = false;
      detail << "counterexample accepted";
    } catch (const NotASystem&) {
      detail << "counterexample rejected";
    }
  }
  r.passed = ok && r.margin >= 0;
  r.detail = detail.str();
  return r;
}

CheckResult check_real_witness(Seed seed) {
  CheckResult r{"real witness from complex: factor sqrt(2)", false, kInf, ""};
  Rng rng = Rng(seed).stream(11);
  for (int trial = 0; trial < 1000; ++trial) {
    Eigen::Index d = 2 + (trial % 7);  // 2..8
    // Orbit of a random real seed under a random signed permutation.
    std::vector<Eigen::Index> perm(d);
    std::iota(perm.begin(), perm.end(), Eigen::Index{0});
    for (Eigen::Index i = d - 1; i > 0; --i)
      std::swap(perm[i], perm[Eigen::Index(rng.uniform() * double(i + 1))]);
    Mat gen = Mat::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      gen(perm[i], i) = rng.uniform() < 0.5 ? 1.0 : -1.0;
    GroupPresentation g =
        GroupPresentation::explicit_group(d, Field::Real, {gen});
    UnitVector v(haar_draw(d, Field::Real, rng), Field::Real);
    TransitiveSet X = orbit_enumerate(g, v, 100000);
    UnitVector w(haar_draw(d, Field::Complex, rng), Field::Complex);
    double complex_sup = sup_correlation(X, w);
    UnitVector real_w = real_witness_from_complex(w, X);
    double real_sup = sup_correlation(X, real_w);
    r.margin = std::min(
        r.margin, std::sqrt(2.0) * complex_sup + 1e-9 - real_sup);
  }
  r.passed = r.margin >= 0;
  r.detail = "min margin " + format(r.margin);
  return r;
}

CheckResult check_rearrange(Seed seed) {
  CheckResult r{"rearrangement closed form vs enumeration oracles", false,
                kInf, ""};
  Rng rng = Rng(seed).stream(12);
  double worst_phase = 0.0, worst_exact = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::Index d = 2 + (trial % 3);  // 2..4
    Vec v = haar_draw(d, Field::Complex, rng);
    Vec w = haar_draw(d, Field::Complex, rng);
    TransitiveSet X = TransitiveSet::virtual_set(
        GroupPresentation::monomial_full(d), UnitVector(v, Field::Complex));
    double closed = sup_correlation(X, UnitVector(w, Field::Complex));
    // Oracle: enumerate permutations; per coordinate, the best phase from
    // a fine grid (decoupled across coordinates for a fixed permutation).
    std::vector<Eigen::Index> perm(d);
    std::iota(perm.begin(), perm.end(), Eigen::Index{0});
    double oracle = 0.0;
    do {
      double s = 0.0;
      for (Eigen::Index i = 0; i < d; ++i) {
        Complex z = v[perm[i]] * std::conj(w[i]);
        double best = -kInf;
        for (int k = 0; k < 1024; ++k) {
          double th = 2.0 * M_PI * k / 1024.0;
          best = std::max(best, z.real() * std::cos(th) -
                                    z.imag() * std::sin(th));
        }
        s += best;
      }
      oracle = std::max(oracle, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    worst_phase = std::max(worst_phase, std::abs(closed - oracle));

    // Real case: exact enumeration of the finite signed-permutation orbit.
    Vec vr = haar_draw(d, Field::Real, rng);
    Vec wr = haar_draw(d, Field::Real, rng);
    TransitiveSet Xr = TransitiveSet::virtual_set(
        GroupPresentation::signed_permutation(d), UnitVector(vr, Field::Real));
    double closed_r = sup_correlation(Xr, UnitVector(wr, Field::Real));
    TransitiveSet orbit = orbit_enumerate(
        GroupPresentation::signed_permutation(d), UnitVector(vr, Field::Real),
        100000);
    double enum_r = sup_correlation(orbit, UnitVector(wr, Field::Real));
    worst_exact = std::max(worst_exact, std::abs(closed_r - enum_r));
  }
  r.margin = std::min(1e-3 - worst_phase, 1e-9 - worst_exact);
  r.passed = r.margin >= 0;
  r.detail = "phase-grid dev " + format(worst_phase) + ", exact dev " +
             format(worst_exact);
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"gram",   "selberg",  "risk",    "sharpness",   "smallcase",
          "prefix", "eta",      "cap",     "combine",     "decompose",
          "realwitness", "rearrange"};
}

std::vector<CheckResult> run_suite(const std::string& name, Seed seed) {
  if (name == "gram") return {check_gram()};
  if (name == "selberg") return {check_selberg(seed)};
  if (name == "risk") return {check_risk_psi(seed)};
  if (name == "sharpness") return {check_sharpness(seed)};
  if (name == "smallcase") return {check_small_widths(seed)};
  if (name == "prefix") return {check_prefix_oracle(seed)};
  if (name == "eta") return {check_eta()};
  if (name == "cap") return {check_cap(seed)};
  if (name == "combine") return {check_combine(seed)};
  if (name == "decompose") return {check_decompose(seed)};
  if (name == "realwitness") return {check_real_witness(seed)};
  if (name == "rearrange") return {check_rearrange(seed)};
  throw InputError("unknown verification suite: " + name);
}

std::vector<CheckResult> acceptance_criteria(Seed seed) {
  return {check_gram(),          check_selberg(seed),
          check_risk_psi(seed),  check_sharpness(seed),
          check_small_widths(seed), check_prefix_oracle(seed),
          check_eta(),           check_cap(seed),
          check_combine(seed),   check_decompose(seed),
          check_real_witness(seed)};
}

}  // namespace tsw
