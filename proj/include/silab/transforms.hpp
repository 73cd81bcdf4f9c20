#pragma once

#include <cstdint>
#include <vector>

#include "silab/matrix.hpp"

namespace silab {

/// A matrix verified on construction to satisfy U*U = I and UU* = I exactly.
class ExactUnitary {
 public:
  explicit ExactUnitary(ExactMatrix u);
  const ExactMatrix& matrix() const { return u_; }

 private:
  ExactMatrix u_;
};

/// Rank-one matrix f (x) g with entries f_i * conj(g_j). Both vectors must
/// be nonzero.
ExactMatrix rank_one_from_vectors(const std::vector<GaussianRational>& f,
                                  const std::vector<GaussianRational>& g);

/// Deterministic exact unitary: a diagonal of fourth-root-of-unity phases
/// times planar rotations with Pythagorean cosine/sine pairs, all derived
/// from the seed by a fixed formula. Stays inside the Gaussian rationals.
/// seed 0 in dimension 2 gives the plain (3/5, 4/5) rotation.
ExactUnitary exact_unitary(int dim, std::uint64_t seed);

/// U T U*.
ExactMatrix conjugate(const ExactMatrix& t, const ExactUnitary& u);

/// Block-diagonal sum.
ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);

/// The pair (P, A) with P = [[1,0],[0,0]], A = [[1,-1],[0,0]] and
/// A = S P S^{-1} for S = [[1,1],[0,1]]; the similarity identity is
/// verified exactly on construction. P generates an SI semigroup, A does
/// not, so the SI property is not a similarity invariant.
std::pair<ExactMatrix, ExactMatrix> similarity_counterexample();

}  // namespace silab
