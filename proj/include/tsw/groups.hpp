#pragma once

#include <optional>
#include <vector>

#include "tsw/numeric.hpp"

namespace tsw {

enum class GroupKind { Explicit, Permutation, SignedPermutation, MonomialFull };

/// A finite isometry group: either explicit unitary generators or a
/// structured tag whose action is computed combinatorially.
class GroupPresentation {
 public:
  static GroupPresentation explicit_group(Eigen::Index dim, Field field,
                                          std::vector<Mat> generators,
                                          const Tolerance& tol = {});
  static GroupPresentation permutation(Eigen::Index degree,
                                       Field field = Field::Real);
  static GroupPresentation signed_permutation(Eigen::Index degree,
                                              Field field = Field::Real);
  static GroupPresentation monomial_full(Eigen::Index degree);

  Eigen::Index dim() const { return dim_; }
  Field field() const { return field_; }
  GroupKind kind() const { return kind_; }
  const std::vector<Mat>& generators() const { return generators_; }

  /// Concrete generating matrices. Structured kinds synthesize theirs;
  /// monomial_full has no finite generating set and throws WrongKind.
  std::vector<Mat> generator_matrices() const;

 private:
  GroupPresentation(Eigen::Index dim, Field field, GroupKind kind,
                    std::vector<Mat> generators)
      : dim_(dim), field_(field), kind_(kind),
        generators_(std::move(generators)) {}

  Eigen::Index dim_;
  Field field_;
  GroupKind kind_;
  std::vector<Mat> generators_;  // explicit kind only
};

/// An orbit, stored explicitly as points or virtually as group + seed.
class TransitiveSet {
 public:
  static TransitiveSet explicit_set(std::vector<Vec> points, Field field,
                                    const Tolerance& tol = {});
  static TransitiveSet virtual_set(GroupPresentation group, UnitVector seed);

  bool is_virtual() const { return group_.has_value(); }
  Eigen::Index dim() const { return dim_; }
  Field field() const { return field_; }

  const std::vector<Vec>& points() const;          // explicit only
  const GroupPresentation& group() const;          // virtual only
  const UnitVector& seed_vector() const;           // virtual only

 private:
  TransitiveSet() = default;

  Eigen::Index dim_ = 0;
  Field field_ = Field::Real;
  std::vector<Vec> points_;
  std::optional<GroupPresentation> group_;
  std::optional<UnitVector> seed_;
};

/// Breadth-first closure of {v} under the group's generators, deduplicated
/// on the orbit_dedup_tol grid. Result is independent of generator order.
TransitiveSet orbit_enumerate(const GroupPresentation& g, const UnitVector& v,
                              std::size_t max_size,
                              const Tolerance& tol = {});

/// sup_{g in G} |<g v, w>|. Explicit orbits take a max over points;
/// virtual monomial_full and real signed-permutation / permutation orbits
/// use the sorted-profile closed forms; complex signed-permutation orbits
/// are enumerated exactly up to d = 8.
double sup_correlation(const TransitiveSet& X, const UnitVector& w,
                       const Tolerance& tol = {});

/// Sorted absolute profile of a virtual orbit's seed vector.
RealVec sorted_profile(const TransitiveSet& X);

/// The extremal transitive set: Gamma_d orbit of (1/sqrt(i*H_d))_{i=1..d}.
TransitiveSet sharpness_set(Eigen::Index d);

/// Exact sup over sign patterns s of |sum_i s_i z_i|.
double max_signed_abs_sum(const std::vector<Complex>& z);

}  // namespace tsw
