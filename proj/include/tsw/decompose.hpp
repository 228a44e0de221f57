#pragma once

#include <string>
#include <vector>

#include "tsw/groups.hpp"
#include "tsw/numeric.hpp"

namespace tsw {

/// Orthogonal direct-sum decomposition: one d x k_i orthonormal basis
/// matrix per block.
struct SubspaceDecomposition {
  std::vector<Mat> blocks;

  std::vector<Eigen::Index> dims() const;
  Mat projector(std::size_t i) const;  // P_i = B_i B_i^*
};

/// Blocks of equal dimension plus coset maps gamma_i with gamma_i V_1 = V_i.
struct ImprimitivitySystem {
  SubspaceDecomposition blocks;
  std::vector<Mat> coset_maps;
};

/// Full closure of the group's generators (matrix BFS, deduplicated).
std::vector<Mat> enumerate_group(const GroupPresentation& g,
                                 std::size_t max_elements = 1000000,
                                 const Tolerance& tol = {});

/// Group-average a random Hermitian matrix (Reynolds operator), then split
/// eigenspaces into invariant blocks. A single block of dimension d means
/// the action is (probabilistically) irreducible.
SubspaceDecomposition reynolds_invariant_subspaces(const GroupPresentation& g,
                                                   Seed seed,
                                                   const Tolerance& tol = {});

struct ImprimitivityReport {
  // sigma[g][i] = j when generator g maps block i onto block j.
  std::vector<std::vector<std::size_t>> block_permutations;
  double max_projector_mismatch = 0.0;
};

/// Checks the system invariants: orthogonal blocks, coset maps carrying
/// V_1 onto each V_i, and every generator permuting the blocks. Throws
/// NotASystem naming the offending generator/block on failure.
ImprimitivityReport validate_imprimitivity(const ImprimitivitySystem& sys,
                                           const GroupPresentation& g,
                                           const Tolerance& tol = {});

}  // namespace tsw
