#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "tsw/errors.hpp"

namespace tsw {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RealVec = Eigen::VectorXd;

enum class Field { Real, Complex };

/// Tolerance policy shared by every module.
struct Tolerance {
  double eq_tol = 1e-9;
  double orbit_dedup_tol = 1e-7;

  void validate() const {
    if (!(eq_tol > 0.0 && eq_tol < 1.0) ||
        !(orbit_dedup_tol > 0.0 && orbit_dedup_tol < 1.0))
      throw DomainError("tolerances must lie in (0, 1)");
  }
};

struct Seed {
  std::uint64_t value = 0;
};

/// Deterministic PRNG: mt19937_64 for the raw stream, hand-rolled
/// Box-Muller for Gaussians, so identical seeds give identical draws on
/// every platform (std::normal_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(Seed s) : seed_(s.value), gen_(s.value) {}

  /// Independent substream derived from this generator's seed.
  Rng stream(std::uint64_t index) const;

  double uniform();   // [0, 1)
  double gaussian();  // standard normal
  Complex complex_gaussian();

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

bool all_finite(const Vec& v);

/// Unit vector on S(R^d) or S(C^d); checked at construction.
class UnitVector {
 public:
  UnitVector(Vec coords, Field field, const Tolerance& tol = {});

  /// Normalizes first, then constructs. Rejects (near-)zero input.
  static UnitVector normalized(Vec coords, Field field,
                               const Tolerance& tol = {});

  const Vec& coords() const { return coords_; }
  Field field() const { return field_; }
  Eigen::Index dim() const { return coords_.size(); }

 private:
  Vec coords_;
  Field field_;
};

/// <a, b> = sum_i a_i conj(b_i); conjugation on the second slot.
Complex inner(const Vec& a, const Vec& b);
Complex inner(const UnitVector& a, const UnitVector& b);

/// Moduli of the coordinates, sorted nonincreasing.
RealVec sorted_abs(const Vec& v);

/// n independent uniform draws on the unit sphere (normalized Gaussians).
std::vector<UnitVector> haar_sample(Eigen::Index d, Field field, Seed seed,
                                    std::size_t n);

/// One Haar draw from an already-positioned generator.
Vec haar_draw(Eigen::Index d, Field field, Rng& rng);

bool is_unitary(const Mat& m, double tol);
double max_abs(const Mat& m);

}  // namespace tsw
