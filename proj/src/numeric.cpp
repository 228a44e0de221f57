#include "tsw/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace tsw {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::stream(std::uint64_t index) const {
  return Rng(Seed{splitmix64(seed_ ^ splitmix64(index + 1))});
}

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 kept away from 0 so the log is finite.
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Complex Rng::complex_gaussian() { return Complex(gaussian(), gaussian()); }

bool all_finite(const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag()))
      return false;
  return true;
}

UnitVector::UnitVector(Vec coords, Field field, const Tolerance& tol)
    : coords_(std::move(coords)), field_(field) {
  tol.validate();
  if (coords_.size() < 1) throw DimError("unit vector needs dimension >= 1");
  if (!all_finite(coords_)) throw DomainError("non-finite coordinate");
  if (field_ == Field::Real) {
    for (Eigen::Index i = 0; i < coords_.size(); ++i)
      if (coords_[i].imag() != 0.0)
        throw DomainError("real vector has nonzero imaginary part");
  }
  double n = coords_.norm();
  if (std::abs(n - 1.0) > tol.eq_tol)
    throw DomainError("vector norm deviates from 1 beyond eq_tol");
}

UnitVector UnitVector::normalized(Vec coords, Field field,
                                  const Tolerance& tol) {
  if (!all_finite(coords)) throw DomainError("non-finite coordinate");
  double n = coords.norm();
  if (n < tol.eq_tol) throw DomainError("cannot normalize near-zero vector");
  return UnitVector(coords / n, field, tol);
}

Complex inner(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimError("inner: dimension mismatch");
  Complex s = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

Complex inner(const UnitVector& a, const UnitVector& b) {
  return inner(a.coords(), b.coords());
}

RealVec sorted_abs(const Vec& v) {
  RealVec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = std::abs(v[i]);
  std::sort(r.data(), r.data() + r.size(), std::greater<double>());
  return r;
}

Vec haar_draw(Eigen::Index d, Field field, Rng& rng) {
  Vec v(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (field == Field::Complex)
      v[i] = rng.complex_gaussian();
    else
      v[i] = Complex(rng.gaussian(), 0.0);
  }
  double n = v.norm();
  if (n == 0.0) {
    v.setZero();
    v[0] = 1.0;
    return v;
  }
  return v / n;
}

std::vector<UnitVector> haar_sample(Eigen::Index d, Field field, Seed seed,
                                    std::size_t n) {
  if (d < 1) throw DimError("haar_sample: d >= 1 required");
  if (n < 1) throw DomainError("haar_sample: n >= 1 required");
  Rng rng(seed);
  std::vector<UnitVector> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    out.emplace_back(haar_draw(d, field, rng), field);
  return out;
}

bool is_unitary(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  Mat gram = m.adjoint() * m;
  gram -= Mat::Identity(m.rows(), m.cols());
  return max_abs(gram) <= tol;
}

double max_abs(const Mat& m) {
  double r = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      r = std::max(r, std::abs(m(i, j)));
  return r;
}

}  // namespace tsw
