#include "tsw/groups.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace tsw {

namespace {

Mat permutation_matrix(Eigen::Index d, const std::vector<Eigen::Index>& perm) {
  Mat m = Mat::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m(perm[i], i) = 1.0;
  return m;
}

std::vector<Mat> symmetric_group_generators(Eigen::Index d) {
  std::vector<Mat> gens;
  if (d < 2) return gens;
  std::vector<Eigen::Index> swap01(d), cycle(d);
  std::iota(swap01.begin(), swap01.end(), Eigen::Index{0});
  std::swap(swap01[0], swap01[1]);
  for (Eigen::Index i = 0; i < d; ++i) cycle[i] = (i + 1) % d;
  gens.push_back(permutation_matrix(d, swap01));
  if (d > 2) gens.push_back(permutation_matrix(d, cycle));
  return gens;
}

// Grid-hash deduplication: round coordinates to the tolerance grid, confirm
// candidates with an exact distance check.
class PointDedup {
 public:
  PointDedup(double tol) : tol_(tol) {}

  // Returns the index of an existing near-duplicate, or inserts and
  // returns npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t find_or_insert(const Vec& p, std::vector<Vec>& store) {
    std::uint64_t key = hash_key(p);
    auto& bucket = buckets_[key];
    for (std::size_t idx : bucket)
      if ((store[idx] - p).norm() <= tol_) return idx;
    store.push_back(p);
    bucket.push_back(store.size() - 1);
    return npos;
  }

 private:
  std::uint64_t hash_key(const Vec& p) const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::int64_t v) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ULL;
    };
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      mix(std::llround(p[i].real() / tol_));
      mix(std::llround(p[i].imag() / tol_));
    }
    return h;
  }

  double tol_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

}  // namespace

GroupPresentation GroupPresentation::explicit_group(Eigen::Index dim,
                                                    Field field,
                                                    std::vector<Mat> generators,
                                                    const Tolerance& tol) {
  if (dim < 1) throw DimError("group dimension must be >= 1");
  for (const Mat& g : generators) {
    if (g.rows() != dim || g.cols() != dim)
      throw DimError("generator has wrong dimensions");
    if (!is_unitary(g, tol.eq_tol))
      throw NonIsometry("generator fails the unitarity check");
  }
  return GroupPresentation(dim, field, GroupKind::Explicit,
                           std::move(generators));
}

GroupPresentation GroupPresentation::permutation(Eigen::Index degree,
                                                 Field field) {
  if (degree < 1) throw DimError("degree must be >= 1");
  return GroupPresentation(degree, field, GroupKind::Permutation, {});
}

GroupPresentation GroupPresentation::signed_permutation(Eigen::Index degree,
                                                        Field field) {
  if (degree < 1) throw DimError("degree must be >= 1");
  return GroupPresentation(degree, field, GroupKind::SignedPermutation, {});
}

GroupPresentation GroupPresentation::monomial_full(Eigen::Index degree) {
  if (degree < 1) throw DimError("degree must be >= 1");
  return GroupPresentation(degree, Field::Complex, GroupKind::MonomialFull,
                           {});
}

std::vector<Mat> GroupPresentation::generator_matrices() const {
  switch (kind_) {
    case GroupKind::Explicit:
      return generators_;
    case GroupKind::Permutation:
      return symmetric_group_generators(dim_);
    case GroupKind::SignedPermutation: {
      auto gens = symmetric_group_generators(dim_);
      Mat flip = Mat::Identity(dim_, dim_);
      flip(0, 0) = -1.0;
      gens.push_back(flip);
      return gens;
    }
    case GroupKind::MonomialFull:
      throw WrongKind(
          "monomial_full has no finite generating set; use the virtual "
          "sorted-profile oracle");
  }
  throw WrongKind("unknown group kind");
}

TransitiveSet TransitiveSet::explicit_set(std::vector<Vec> points, Field field,
                                          const Tolerance& tol) {
  tol.validate();
  if (points.empty()) throw DimError("explicit set needs at least one point");
  Eigen::Index d = points.front().size();
  for (const Vec& p : points) {
    if (p.size() != d) throw DimError("points have mixed dimensions");
    UnitVector(p, field, tol);  // unit-norm / field validation
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if ((points[i] - points[j]).norm() <= tol.orbit_dedup_tol)
        throw InputError("explicit points are not pairwise distinct");
  TransitiveSet X;
  X.dim_ = d;
  X.field_ = field;
  X.points_ = std::move(points);
  return X;
}

TransitiveSet TransitiveSet::virtual_set(GroupPresentation group,
                                         UnitVector seed) {
  if (group.dim() != seed.dim())
    throw DimError("group and seed vector dimensions differ");
  TransitiveSet X;
  X.dim_ = group.dim();
  X.field_ = group.field();
  X.group_ = std::move(group);
  X.seed_ = std::move(seed);
  return X;
}

const std::vector<Vec>& TransitiveSet::points() const {
  if (is_virtual()) throw WrongKind("virtual set has no explicit point list");
  return points_;
}

const GroupPresentation& TransitiveSet::group() const {
  if (!is_virtual()) throw WrongKind("explicit set has no group");
  return *group_;
}

const UnitVector& TransitiveSet::seed_vector() const {
  if (!is_virtual()) throw WrongKind("explicit set has no seed vector");
  return *seed_;
}

TransitiveSet orbit_enumerate(const GroupPresentation& g, const UnitVector& v,
                              std::size_t max_size, const Tolerance& tol) {
  tol.validate();
  if (g.dim() != v.dim()) throw DimError("orbit_enumerate: dim mismatch");
  std::vector<Mat> gens = g.generator_matrices();
  for (const Mat& m : gens)
    if (!is_unitary(m, tol.eq_tol))
      throw NonIsometry("generator fails the unitarity check");

  std::vector<Vec> pts;
  PointDedup dedup(tol.orbit_dedup_tol);
  dedup.find_or_insert(v.coords(), pts);
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::size_t idx = frontier.front();
    frontier.pop_front();
    for (const Mat& m : gens) {
      Vec q = m * pts[idx];
      if (dedup.find_or_insert(q, pts) == PointDedup::npos) {
        if (pts.size() > max_size)
          throw OrbitOverflow("orbit closure exceeds max_size");
        frontier.push_back(pts.size() - 1);
      }
    }
  }
  if (g.field() == Field::Real)
    for (Vec& p : pts)
      for (Eigen::Index i = 0; i < p.size(); ++i) p[i].imag(0.0);
  return TransitiveSet::explicit_set(std::move(pts), g.field(), tol);
}

double max_signed_abs_sum(const std::vector<Complex>& z) {
  // max over s in {+-1}^n of |sum s_i z_i| equals max over theta of
  // sum_i |Re(z_i e^{-i theta})|. Candidate angles: interval midpoints
  // between the breakpoints arg(z_i) + pi/2 (mod pi); each candidate's
  // sign pattern gives the exact interval value |sum s_i z_i|.
  std::vector<double> breaks;
  double real_only = 0.0;
  bool all_real = true;
  for (const Complex& zi : z) {
    if (zi.imag() != 0.0) all_real = false;
    real_only += std::abs(zi.real());
    if (std::abs(zi) > 0.0) {
      double b = std::fmod(std::arg(zi) + M_PI / 2, M_PI);
      if (b < 0) b += M_PI;
      breaks.push_back(b);
    }
  }
  if (all_real) return real_only;
  breaks.push_back(0.0);
  breaks.push_back(M_PI);
  std::sort(breaks.begin(), breaks.end());
  double best = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    double mid = 0.5 * (breaks[k] + breaks[k + 1]);
    Complex acc = 0.0;
    for (const Complex& zi : z) {
      double re = zi.real() * std::cos(mid) + zi.imag() * std::sin(mid);
      acc += (re >= 0.0) ? zi : -zi;
    }
    best = std::max(best, std::abs(acc));
  }
  return best;
}

namespace {

double signed_perm_sup_exact(const Vec& v, const Vec& w) {
  Eigen::Index d = v.size();
  std::vector<Eigen::Index> perm(d);
  std::iota(perm.begin(), perm.end(), Eigen::Index{0});
  double best = 0.0;
  std::vector<Complex> z(d);
  do {
    for (Eigen::Index i = 0; i < d; ++i)
      z[i] = v[perm[i]] * std::conj(w[i]);
    best = std::max(best, max_signed_abs_sum(z));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool effectively_real(const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i].imag() != 0.0) return false;
  return true;
}

RealVec sorted_real(const Vec& v, bool descending) {
  RealVec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = v[i].real();
  if (descending)
    std::sort(r.data(), r.data() + r.size(), std::greater<double>());
  else
    std::sort(r.data(), r.data() + r.size());
  return r;
}

}  // namespace

double sup_correlation(const TransitiveSet& X, const UnitVector& w,
                       const Tolerance& tol) {
  if (X.dim() != w.dim()) throw DimError("sup_correlation: dim mismatch");
  if (!X.is_virtual()) {
    double best = 0.0;
    for (const Vec& x : X.points())
      best = std::max(best, std::abs(inner(x, w.coords())));
    return best;
  }
  const GroupPresentation& g = X.group();
  const Vec& v = X.seed_vector().coords();
  switch (g.kind()) {
    case GroupKind::MonomialFull:
      return sorted_abs(v).dot(sorted_abs(w.coords()));
    case GroupKind::SignedPermutation: {
      if (effectively_real(v) && effectively_real(w.coords()))
        return sorted_abs(v).dot(sorted_abs(w.coords()));
      if (X.dim() <= 8) return signed_perm_sup_exact(v, w.coords());
      throw UnsupportedVirtual(
          "complex signed_permutation sup is enumerated only for d <= 8; "
          "use monomial_full");
    }
    case GroupKind::Permutation: {
      if (!(effectively_real(v) && effectively_real(w.coords())))
        throw UnsupportedVirtual(
            "virtual permutation sup requires real data; enumerate first");
      // Rearrangement: the max pairs like-sorted orders, the min opposite.
      RealVec vd = sorted_real(v, true), wd = sorted_real(w.coords(), true);
      RealVec wa = sorted_real(w.coords(), false);
      double hi = vd.dot(wd), lo = vd.dot(wa);
      return std::max(std::abs(hi), std::abs(lo));
    }
    case GroupKind::Explicit:
      throw UnsupportedVirtual(
          "virtual set over explicit generators: enumerate the orbit first");
  }
  throw WrongKind("unknown group kind");
  (void)tol;
}

RealVec sorted_profile(const TransitiveSet& X) {
  if (!X.is_virtual()) throw WrongKind("sorted_profile needs a virtual set");
  GroupKind k = X.group().kind();
  if (k != GroupKind::MonomialFull && k != GroupKind::SignedPermutation)
    throw WrongKind(
        "sorted_profile requires monomial_full or signed_permutation");
  return sorted_abs(X.seed_vector().coords());
}

TransitiveSet sharpness_set(Eigen::Index d) {
  if (d < 1) throw DimError("sharpness_set: d >= 1 required");
  double harmonic = 0.0;
  for (Eigen::Index i = 1; i <= d; ++i) harmonic += 1.0 / double(i);
  Vec seed(d);
  for (Eigen::Index i = 0; i < d; ++i)
    seed[i] = 1.0 / std::sqrt(double(i + 1) * harmonic);
  Tolerance tol;
  return TransitiveSet::virtual_set(GroupPresentation::monomial_full(d),
                                    UnitVector(seed, Field::Complex, tol));
}

}  // namespace tsw
