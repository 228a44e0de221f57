#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "tsw/groups.hpp"
#include "tsw/numeric.hpp"

namespace tsw {

enum class LowerCertificate { None, Eig, PrefixFlat, Sweep2d };

std::string to_string(LowerCertificate c);

struct WidthReport {
  double upper = 1.0;
  UnitVector witness;
  double lower = 0.0;
  LowerCertificate certificate = LowerCertificate::None;
  std::size_t iterations = 0;
  std::size_t restarts = 0;
};

struct SolverConfig {
  int restarts = 64;
  int max_iters = 2000;
  double initial_step = 0.5;
  double polish_tol = 1e-10;
  Seed seed;

  void validate() const {
    if (restarts < 1 || max_iters < 1)
      throw DomainError("solver needs restarts >= 1 and max_iters >= 1");
  }
};

/// Multi-restart projected subgradient descent on w -> sup_corr(X, w) over
/// the sphere, followed by a shrinking-radius polish. The returned value is
/// an honest upper bound: it is the evaluated objective at the witness.
std::pair<UnitVector, double> width_upper(const TransitiveSet& X,
                                          const SolverConfig& cfg,
                                          const Tolerance& tol = {});

/// sqrt(lambda_min) of the orbit covariance M = (1/|X|) sum x x*; a valid
/// lower bound since max_x |<x,w>|^2 >= w* M w >= lambda_min.
double width_lower_eig(const TransitiveSet& X);

/// Exact width of a virtual monomial orbit with sorted profile p:
/// min_k (1/sqrt k) sum_{i<=k} p_i, attained by the prefix-flat witness.
std::pair<double, UnitVector> width_exact_monomial(const TransitiveSet& X);

/// Real witness from a complex one: the larger of Re w, Im w, normalized.
/// Guarantees sup_corr(X, result) <= sqrt(2) * sup_corr(X, w) for real X.
UnitVector real_witness_from_complex(const UnitVector& w,
                                     const TransitiveSet& X,
                                     const Tolerance& tol = {});

/// Dense angle sweep for explicit real 2-d sets. Returns (witness, value,
/// final grid step); the continuum minimum is >= value - step since the
/// objective is 1-Lipschitz in the angle.
struct Sweep2dResult {
  UnitVector witness;
  double value;
  double step;
};
Sweep2dResult sweep2d(const TransitiveSet& X, std::size_t n_angles = 1000000,
                      const Tolerance& tol = {});

/// Upper bound plus the best applicable lower certificate.
WidthReport width_report(const TransitiveSet& X, const SolverConfig& cfg = {},
                         const Tolerance& tol = {});

}  // namespace tsw
