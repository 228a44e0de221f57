#include "tsw/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tsw {

SymmetricMeasure SymmetricMeasure::from_atoms(std::vector<Vec> atoms,
                                              std::vector<double> weights,
                                              Field field,
                                              const Tolerance& tol) {
  if (atoms.empty() || atoms.size() != weights.size())
    throw InputError("atom/weight lists must be nonempty and equal length");
  SymmetricMeasure mu;
  mu.dim = atoms.front().size();
  mu.field = field;
  mu.kind = Kind::Atoms;
  mu.atoms = std::move(atoms);
  mu.weights = std::move(weights);
  mu.validate(tol);
  return mu;
}

SymmetricMeasure SymmetricMeasure::haar(Eigen::Index dim, Field field,
                                        Seed seed, std::size_t n_samples) {
  if (dim < 1) throw DimError("measure dimension must be >= 1");
  if (n_samples < 1) throw DomainError("haar measure needs n_samples >= 1");
  SymmetricMeasure mu;
  mu.dim = dim;
  mu.field = field;
  mu.kind = Kind::Haar;
  mu.seed = seed;
  mu.n_samples = n_samples;
  return mu;
}

void SymmetricMeasure::validate(const Tolerance& tol) const {
  if (kind == Kind::Haar) return;
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw InputError("atom weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > tol.eq_tol)
    throw InputError("atom weights must sum to 1");
  for (const Vec& a : atoms) {
    if (a.size() != dim) throw DimError("atom has wrong dimension");
    UnitVector(a, field, tol);
  }
  // Symmetry: the total weight near -a must match the total weight near a.
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    double w_plus = 0.0, w_minus = 0.0;
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if ((atoms[j] - atoms[i]).norm() <= tol.orbit_dedup_tol)
        w_plus += weights[j];
      if ((atoms[j] + atoms[i]).norm() <= tol.orbit_dedup_tol)
        w_minus += weights[j];
    }
    if (std::abs(w_plus - w_minus) > tol.eq_tol)
      throw InputError("measure is not symmetric under w -> -w");
  }
}

int dyadic_m(Eigen::Index d) {
  if (d < 1) throw DimError("dyadic_m: d >= 1 required");
  if (d == 1) return 0;
  return static_cast<int>(std::ceil(std::log2(double(d)) / 2.0 - 1e-12));
}

DyadicFamily DyadicFamily::make(Eigen::Index d) {
  DyadicFamily fam;
  fam.dim = d;
  fam.m = dyadic_m(d);
  for (int i = 0; i <= fam.m; ++i) {
    Eigen::Index block = Eigen::Index{1} << i;
    Vec e = Vec::Zero(d);
    double val = std::pow(2.0, -0.5 * i);
    for (Eigen::Index k = 0; k < block; ++k) e[k] = val;
    fam.vectors.push_back(std::move(e));
  }
  return fam;
}

SymmetricMeasure dyadic_measure(Eigen::Index d) {
  DyadicFamily fam = DyadicFamily::make(d);
  std::vector<Vec> atoms;
  std::vector<double> weights;
  double w = 1.0 / (2.0 * (fam.m + 1));
  for (const Vec& e : fam.vectors) {
    atoms.push_back(e);
    atoms.push_back(-e);
    weights.push_back(w);
    weights.push_back(w);
  }
  return SymmetricMeasure::from_atoms(std::move(atoms), std::move(weights),
                                      Field::Complex);
}

double selberg_bound(const std::vector<Vec>& vectors) {
  if (vectors.empty()) throw InputError("selberg_bound: empty family");
  double best = 0.0;
  for (const Vec& vi : vectors) {
    double row = 0.0;
    for (const Vec& vj : vectors) row += std::abs(inner(vi, vj));
    best = std::max(best, row);
  }
  return best;
}

double psi(Eigen::Index d) {
  int m = dyadic_m(d);
  // Scan every interval I = {a, ..., a+m}; the centered placements win.
  double best = 0.0;
  for (int a = -m; a <= 0; ++a) {
    double s = 0.0;
    for (int n = a; n <= a + m; ++n) s += std::pow(2.0, -0.5 * std::abs(n));
    best = std::max(best, s);
  }
  return best / (m + 1);
}

RiskEstimate measure_risk(const SymmetricMeasure& mu, const TransitiveSet& X,
                          const Tolerance& tol) {
  if (mu.dim != X.dim()) throw DimError("measure_risk: dim mismatch");
  RiskEstimate est;
  if (mu.kind == SymmetricMeasure::Kind::Atoms) {
    double r = 0.0;
    for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
      double s = sup_correlation(X, UnitVector(mu.atoms[i], mu.field, tol),
                                 tol);
      r += mu.weights[i] * s * s;
    }
    est.value = est.ci_low = est.ci_high = r;
    est.exact = true;
    return est;
  }
  Rng rng{mu.seed};
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t k = 0; k < mu.n_samples; ++k) {
    Vec w = haar_draw(mu.dim, mu.field, rng);
    double s = sup_correlation(X, UnitVector(w, mu.field, tol), tol);
    sum += s * s;
    sum_sq += s * s * s * s;
  }
  double n = double(mu.n_samples);
  double mean = sum / n;
  double var = std::max(0.0, sum_sq / n - mean * mean);
  double half = 2.5758293035489004 * std::sqrt(var / n);  // 99% two-sided
  est.value = mean;
  est.ci_low = std::max(0.0, mean - half);
  est.ci_high = mean + half;
  est.exact = false;
  return est;
}

SymmetricMeasure projected_dyadic_measure(Eigen::Index d) {
  if (d < 2) throw DimError("projected_dyadic_measure: d >= 2 required");
  DyadicFamily fam = DyadicFamily::make(d);
  std::vector<Vec> atoms;
  std::vector<double> kept_weight;
  for (int i = 0; i <= fam.m; ++i) {
    Vec bar = fam.vectors[i];
    double shift = std::pow(2.0, 0.5 * i) / double(d);
    for (Eigen::Index k = 0; k < d; ++k) bar[k] -= shift;
    double n = bar.norm();
    if (n <= 1e-12) continue;  // e_m parallel to 1 (happens only at d = 2)
    bar /= n;
    atoms.push_back(bar);
    atoms.push_back(-bar);
    kept_weight.push_back(1.0);
    kept_weight.push_back(1.0);
  }
  if (atoms.empty())
    throw DomainError("all projected dyadic atoms vanished");
  double w = 1.0 / double(atoms.size());
  std::vector<double> weights(atoms.size(), w);
  return SymmetricMeasure::from_atoms(std::move(atoms), std::move(weights),
                                      Field::Complex);
}

SymmetricMeasure combine_reducible(const SymmetricMeasure& mu1,
                                   const SymmetricMeasure& mu2, double f1,
                                   double f2, const Mat& embed1,
                                   const Mat& embed2, const Tolerance& tol) {
  if (mu1.kind != SymmetricMeasure::Kind::Atoms ||
      mu2.kind != SymmetricMeasure::Kind::Atoms)
    throw WrongKind("combine_reducible requires atom measures");
  if (!(f1 > 0.0 && f1 <= 1.0 && f2 > 0.0 && f2 <= 1.0))
    throw DomainError("f1, f2 must lie in (0, 1]");
  if (embed1.cols() != mu1.dim || embed2.cols() != mu2.dim)
    throw DimError("embedding column count must match measure dimension");
  if (embed1.rows() != embed2.rows())
    throw DimError("embeddings must target the same ambient space");
  if (max_abs(embed1.adjoint() * embed1 - Mat::Identity(mu1.dim, mu1.dim)) >
          tol.eq_tol ||
      max_abs(embed2.adjoint() * embed2 - Mat::Identity(mu2.dim, mu2.dim)) >
          tol.eq_tol)
    throw InputError("embeddings must be isometric");
  if (max_abs(embed1.adjoint() * embed2) > tol.eq_tol)
    throw NonOrthogonalSubspaces("embedded subspaces are not orthogonal");

  double denom = std::sqrt(f1 * f1 + f2 * f2);
  double lambda1 = f2 / denom, lambda2 = f1 / denom;
  std::vector<Vec> atoms;
  std::vector<double> weights;
  for (std::size_t i = 0; i < mu1.atoms.size(); ++i)
    for (std::size_t j = 0; j < mu2.atoms.size(); ++j) {
      atoms.push_back(lambda1 * (embed1 * mu1.atoms[i]) +
                      lambda2 * (embed2 * mu2.atoms[j]));
      weights.push_back(mu1.weights[i] * mu2.weights[j]);
    }
  Field field = (mu1.field == Field::Real && mu2.field == Field::Real)
                    ? Field::Real
                    : Field::Complex;
  if (field == Field::Real)
    for (Vec& a : atoms)
      for (Eigen::Index i = 0; i < a.size(); ++i) a[i].imag(0.0);
  return SymmetricMeasure::from_atoms(std::move(atoms), std::move(weights),
                                      field, tol);
}

SymmetricMeasure combine_imprimitive(const SymmetricMeasure& mu1,
                                     const SymmetricMeasure& mu2,
                                     const std::vector<Mat>& gammas,
                                     const Tolerance& tol) {
  if (mu1.kind != SymmetricMeasure::Kind::Atoms ||
      mu2.kind != SymmetricMeasure::Kind::Atoms)
    throw WrongKind("combine_imprimitive requires atom measures");
  if (gammas.empty() ||
      static_cast<Eigen::Index>(gammas.size()) != mu2.dim)
    throw DimError("need one coset map per coordinate of mu2");
  Eigen::Index d = gammas.front().rows();
  for (const Mat& g : gammas) {
    if (g.rows() != d || g.cols() != d)
      throw DimError("coset maps have mixed dimensions");
    if (!is_unitary(g, tol.eq_tol))
      throw NonIsometry("coset map fails the unitarity check");
  }
  if (mu1.dim != d)
    throw DimError("mu1 must live in the ambient space of the coset maps");

  // Lemma-2.2-style validation: the images gamma_i supp(mu1) must be
  // pairwise orthogonal.
  for (std::size_t i = 0; i < gammas.size(); ++i)
    for (std::size_t j = i + 1; j < gammas.size(); ++j)
      for (const Vec& a : mu1.atoms)
        for (const Vec& b : mu1.atoms)
          if (std::abs(inner(gammas[i] * a, gammas[j] * b)) > 1e-6)
            throw NonOrthogonalBlocks(
                "coset-map images of the support are not orthogonal");

  std::vector<Vec> atoms;
  std::vector<double> weights;
  for (std::size_t i = 0; i < mu1.atoms.size(); ++i)
    for (std::size_t j = 0; j < mu2.atoms.size(); ++j) {
      Vec out = Vec::Zero(d);
      for (Eigen::Index k = 0; k < mu2.dim; ++k)
        out += mu2.atoms[j][k] * (gammas[k] * mu1.atoms[i]);
      if (std::abs(out.norm() - 1.0) > 1e-9)
        throw NonOrthogonalBlocks("combined atom is not unit norm");
      atoms.push_back(std::move(out));
      weights.push_back(mu1.weights[i] * mu2.weights[j]);
    }
  Field field = (mu1.field == Field::Real && mu2.field == Field::Real)
                    ? Field::Real
                    : Field::Complex;
  return SymmetricMeasure::from_atoms(std::move(atoms), std::move(weights),
                                      field, tol);
}

double eta(double x, EtaParams params) {
  params.validate();
  if (x < 1.0) throw DomainError("eta is defined for x >= 1");
  return 1.0 / std::sqrt(1.0 + params.c * std::log(x));
}

EtaCheckReport eta_inequalities_check(
    EtaParams params, const std::vector<std::pair<double, double>>& grid) {
  params.validate();
  EtaCheckReport rep;
  rep.min_margin_sum = std::numeric_limits<double>::infinity();
  rep.min_margin_product = std::numeric_limits<double>::infinity();
  for (const auto& [x, y] : grid) {
    if (x < 1.0 || y < 1.0) throw DomainError("grid points must be >= 1");
    double ex = eta(x, params), ey = eta(y, params);
    double combined = ex * ey / std::sqrt(ex * ex + ey * ey);
    double margin_sum = eta(x + y, params) - combined;
    double margin_prod = eta(x * y, params) - ex * ey;
    if (margin_sum < rep.min_margin_sum) {
      rep.min_margin_sum = margin_sum;
      rep.argmin_sum = {x, y};
    }
    if (margin_prod < rep.min_margin_product) {
      rep.min_margin_product = margin_prod;
      rep.argmin_product = {x, y};
    }
    ++rep.n_points;
  }
  return rep;
}

std::pair<UnitVector, double> haar_witness(const TransitiveSet& X,
                                           std::size_t n_samples, Seed seed,
                                           const Tolerance& tol) {
  if (n_samples < 1) throw DomainError("haar_witness: n_samples >= 1");
  Rng rng{seed};
  Vec best;
  double best_val = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n_samples; ++k) {
    Vec w = haar_draw(X.dim(), X.field(), rng);
    double s = sup_correlation(X, UnitVector(w, X.field(), tol), tol);
    if (s < best_val) {
      best_val = s;
      best = std::move(w);
    }
  }
  return {UnitVector(best, X.field(), tol), best_val};
}

}  // namespace tsw
