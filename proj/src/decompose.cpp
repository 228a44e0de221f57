#include "tsw/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>

namespace tsw {

std::vector<Eigen::Index> SubspaceDecomposition::dims() const {
  std::vector<Eigen::Index> out;
  out.reserve(blocks.size());
  for (const Mat& b : blocks) out.push_back(b.cols());
  return out;
}

Mat SubspaceDecomposition::projector(std::size_t i) const {
  return blocks[i] * blocks[i].adjoint();
}

namespace {

std::uint64_t matrix_key(const Mat& m, double tol) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::int64_t v) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ULL;
  };
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      mix(std::llround(m(i, j).real() / tol));
      mix(std::llround(m(i, j).imag() / tol));
    }
  return h;
}

}  // namespace

std::vector<Mat> enumerate_group(const GroupPresentation& g,
                                 std::size_t max_elements,
                                 const Tolerance& tol) {
  tol.validate();
  std::vector<Mat> gens = g.generator_matrices();
  for (const Mat& m : gens)
    if (!is_unitary(m, tol.eq_tol))
      throw NonIsometry("generator fails the unitarity check");

  Eigen::Index d = g.dim();
  std::vector<Mat> elements;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  auto find_or_insert = [&](const Mat& m) -> bool {
    std::uint64_t key = matrix_key(m, tol.orbit_dedup_tol);
    auto& bucket = buckets[key];
    for (std::size_t idx : bucket)
      if (max_abs(elements[idx] - m) <= tol.orbit_dedup_tol) return false;
    elements.push_back(m);
    bucket.push_back(elements.size() - 1);
    return true;
  };
  find_or_insert(Mat::Identity(d, d));
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::size_t idx = frontier.front();
    frontier.pop_front();
    for (const Mat& gen : gens) {
      Mat next = gen * elements[idx];
      if (find_or_insert(next)) {
        if (elements.size() > max_elements)
          throw OrbitOverflow("group closure exceeds the element bound");
        frontier.push_back(elements.size() - 1);
      }
    }
  }
  return elements;
}

SubspaceDecomposition reynolds_invariant_subspaces(const GroupPresentation& g,
                                                   Seed seed,
                                                   const Tolerance& tol) {
  Eigen::Index d = g.dim();
  Rng rng{seed};
  Mat h0(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) h0(i, j) = rng.complex_gaussian();
  h0 = Mat((h0 + h0.adjoint()) / 2.0);

  std::vector<Mat> elements = enumerate_group(g, 1000000, tol);
  Mat averaged = Mat::Zero(d, d);
  for (const Mat& u : elements) averaged += u * h0 * u.adjoint();
  averaged /= double(elements.size());

  Eigen::SelfAdjointEigenSolver<Mat> es(averaged);
  RealVec lam = es.eigenvalues();
  const Mat& vecs = es.eigenvectors();

  // Cluster eigenvalues: split at gaps above the tolerance; if that yields
  // no split but the spread is large, fall back to the largest relative gap.
  const double cluster_tol = 1e-7;
  std::vector<std::size_t> splits;  // index i means split between i-1 and i
  for (Eigen::Index i = 1; i < d; ++i)
    if (lam[i] - lam[i - 1] > cluster_tol) splits.push_back(i);
  if (splits.empty() && d > 1 && lam[d - 1] - lam[0] > 10 * cluster_tol) {
    Eigen::Index best = 1;
    double best_gap = 0.0;
    for (Eigen::Index i = 1; i < d; ++i)
      if (lam[i] - lam[i - 1] > best_gap) {
        best_gap = lam[i] - lam[i - 1];
        best = i;
      }
    splits.push_back(best);
  }

  SubspaceDecomposition dec;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    dec.blocks.push_back(vecs.middleCols(start, end - start));
    start = end;
  };
  for (std::size_t s : splits) emit(s);
  emit(static_cast<std::size_t>(d));
  return dec;
}

ImprimitivityReport validate_imprimitivity(const ImprimitivitySystem& sys,
                                           const GroupPresentation& g,
                                           const Tolerance& tol) {
  const auto& blocks = sys.blocks.blocks;
  if (blocks.empty()) throw NotASystem("no blocks given");
  Eigen::Index d = g.dim();
  Eigen::Index total = 0;
  for (const Mat& b : blocks) {
    if (b.rows() != d) throw NotASystem("block basis has wrong row count");
    if (max_abs(b.adjoint() * b - Mat::Identity(b.cols(), b.cols())) >
        tol.eq_tol)
      throw NotASystem("block basis is not orthonormal");
    total += b.cols();
  }
  if (total != d) throw NotASystem("block dimensions do not sum to d");
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (max_abs(blocks[i].adjoint() * blocks[j]) > tol.eq_tol)
        throw NotASystem("blocks " + std::to_string(i) + " and " +
                         std::to_string(j) + " are not orthogonal");

  std::vector<Mat> projectors;
  projectors.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    projectors.push_back(sys.blocks.projector(i));

  if (!sys.coset_maps.empty()) {
    if (sys.coset_maps.size() != blocks.size())
      throw NotASystem("need one coset map per block");
    for (std::size_t i = 0; i < sys.coset_maps.size(); ++i) {
      const Mat& gamma = sys.coset_maps[i];
      if (!is_unitary(gamma, tol.eq_tol))
        throw NotASystem("coset map " + std::to_string(i) +
                         " is not unitary");
      if (max_abs(gamma * projectors[0] * gamma.adjoint() - projectors[i]) >
          1e-6)
        throw NotASystem("coset map " + std::to_string(i) +
                         " does not carry V_1 onto V_" + std::to_string(i + 1));
    }
  }

  ImprimitivityReport rep;
  std::vector<Mat> gens = g.generator_matrices();
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    std::vector<std::size_t> sigma(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      Mat moved = gens[gi] * projectors[i] * gens[gi].adjoint();
      bool found = false;
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        double mismatch = max_abs(moved - projectors[j]);
        if (mismatch <= 1e-6) {
          sigma[i] = j;
          rep.max_projector_mismatch =
              std::max(rep.max_projector_mismatch, mismatch);
          found = true;
          break;
        }
      }
      if (!found)
        throw NotASystem("generator " + std::to_string(gi) +
                         " does not permute block " + std::to_string(i));
    }
    rep.block_permutations.push_back(std::move(sigma));
  }
  return rep;
}

}  // namespace tsw
