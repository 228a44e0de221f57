#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tsw/groups.hpp"
#include "tsw/numeric.hpp"

namespace tsw {

/// Finitely supported symmetric probability measure on the sphere, or the
/// Haar tag with a sampler config. Symmetric: atom -a accompanies every a,
/// with equal total weight.
struct SymmetricMeasure {
  enum class Kind { Atoms, Haar };

  Eigen::Index dim = 0;
  Field field = Field::Real;
  Kind kind = Kind::Atoms;

  std::vector<Vec> atoms;       // Atoms kind
  std::vector<double> weights;  // Atoms kind
  Seed seed;                    // Haar kind
  std::size_t n_samples = 0;    // Haar kind

  static SymmetricMeasure from_atoms(std::vector<Vec> atoms,
                                     std::vector<double> weights, Field field,
                                     const Tolerance& tol = {});
  static SymmetricMeasure haar(Eigen::Index dim, Field field, Seed seed,
                               std::size_t n_samples);

  void validate(const Tolerance& tol = {}) const;
};

/// m = ceil(log d / (2 log 2)) for the dyadic construction.
int dyadic_m(Eigen::Index d);

/// Vectors e_0..e_m, e_i having its first 2^i coordinates equal to
/// 2^{-i/2} and the rest zero. Gram matrix is <e_i, e_j> = 2^{-|i-j|/2}.
struct DyadicFamily {
  Eigen::Index dim;
  int m;
  std::vector<Vec> vectors;

  static DyadicFamily make(Eigen::Index d);
};

/// Atoms +-e_0..+-e_m, each with weight 1/(2(m+1)).
SymmetricMeasure dyadic_measure(Eigen::Index d);

/// S = max_i sum_j |<v_i, v_j>|; Selberg's inequality certifies
/// sum_i |<v, v_i>|^2 <= S for every unit v.
double selberg_bound(const std::vector<Vec>& vectors);

/// (1/(m+1)) * max over integer intervals of length m+1 of
/// sum_{n in I} 2^{-|n|/2}.
double psi(Eigen::Index d);

struct RiskEstimate {
  double value = 0.0;
  double ci_low = 0.0;   // 99% normal-approximation interval (Haar kind)
  double ci_high = 0.0;  // equals value for exact atom sums
  bool exact = true;
};

/// Integral of sup_g |<g v, w>|^2 d mu(w): exact weighted sum over atoms,
/// or a Monte Carlo mean with confidence interval for the Haar kind.
RiskEstimate measure_risk(const SymmetricMeasure& mu, const TransitiveSet& X,
                          const Tolerance& tol = {});

/// Dyadic atoms projected to 1-perp and renormalized; atoms whose
/// projection vanishes (only e_m at d = 2) are dropped and the weights
/// rescaled to keep a probability measure.
SymmetricMeasure projected_dyadic_measure(Eigen::Index d);

/// Pushforward of mu1 x mu2 through (w1, w2) -> lambda1 E1 w1 + lambda2 E2 w2
/// with lambda1 = f2/sqrt(f1^2+f2^2), lambda2 = f1/sqrt(f1^2+f2^2).
/// embed1/embed2 are isometric embeddings with orthogonal images.
SymmetricMeasure combine_reducible(const SymmetricMeasure& mu1,
                                   const SymmetricMeasure& mu2, double f1,
                                   double f2, const Mat& embed1,
                                   const Mat& embed2,
                                   const Tolerance& tol = {});

/// Pushforward of mu1 x mu2 through (x, lambda) -> sum_i lambda_i gamma_i x.
/// The gamma_i must be unitary with pairwise orthogonal images of mu1's
/// support; every output atom is validated to unit norm.
SymmetricMeasure combine_imprimitive(const SymmetricMeasure& mu1,
                                     const SymmetricMeasure& mu2,
                                     const std::vector<Mat>& gammas,
                                     const Tolerance& tol = {});

struct EtaParams {
  double c = 1.4426950408889634;  // 1/ln 2, the largest admissible value

  void validate() const {
    if (!(c > 0.0 && c <= 1.4426950408889634 + 1e-15))
      throw DomainError("eta parameter c must lie in (0, 1/ln 2]");
  }
};

/// eta(x) = (1 + c log x)^{-1/2} for x >= 1.
double eta(double x, EtaParams params = {});

struct EtaCheckReport {
  // Margin of eta(x+y) - eta(x)eta(y)/sqrt(eta(x)^2+eta(y)^2).
  double min_margin_sum = 0.0;
  std::pair<double, double> argmin_sum{1.0, 1.0};
  // Margin of eta(xy) - eta(x)eta(y).
  double min_margin_product = 0.0;
  std::pair<double, double> argmin_product{1.0, 1.0};
  std::size_t n_points = 0;

  bool all_hold(double slack = 0.0) const {
    return min_margin_sum >= -slack && min_margin_product >= -slack;
  }
};

EtaCheckReport eta_inequalities_check(
    EtaParams params, const std::vector<std::pair<double, double>>& grid);

/// Best of n_samples Haar draws as a width witness: returns the w
/// minimizing sup_correlation(X, w) and the achieved value.
std::pair<UnitVector, double> haar_witness(const TransitiveSet& X,
                                           std::size_t n_samples, Seed seed,
                                           const Tolerance& tol = {});

}  // namespace tsw
