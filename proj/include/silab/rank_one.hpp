#pragma once

#include <stdexcept>

#include "silab/matrix.hpp"

namespace silab {

struct NotRankOneError : std::domain_error {
  explicit NotRankOneError(const std::string& what) : std::domain_error(what) {}
};

/// The pair (a = tr T, s = ||T||^2) of a rank-one matrix, the complete
/// unitary invariant for rank-one classification. s >= |a|^2 always, with
/// equality exactly when T is normal; the gap b_sq = s - |a|^2 stands in
/// for |b|^2 of the canonical 2x2 form. b itself is never materialized
/// because its square root is generally irrational.
struct RankOneProfile {
  GaussianRational a;
  Rational s;
  int dim;  // carried for report text only; classification ignores it
};

RankOneProfile profile(const ExactMatrix& t);

/// (a, b_sq) with b_sq = s - |a|^2 >= 0; determines the matrix up to
/// unitary equivalence among rank-one matrices.
std::pair<GaussianRational, Rational> canonical_form(const RankOneProfile& p);

bool is_normal_rank_one(const RankOneProfile& p);

/// Power-partial-isometry test for a rank-one partial isometry (s = 1):
/// true iff tr T = 0 or |tr T| = 1.
bool ppi_rank_one(const RankOneProfile& p);

/// Verifies the five rank-one power identities at exponent n by exact
/// matrix computation:
///   (T*T)^n = s^{n-1} T*T      (T*T)^{2n} = s^n (T*T)^n
///   (T*T)^n T* = s^n T*
///   (TT*)^n = s^{n-1} TT*      (TT*)^{2n} = s^n (TT*)^n
///   (TT*)^n T = s^n T
///   T^n = a^{n-1} T  (n > 1)
bool pt3_check(const ExactMatrix& t, int n);

}  // namespace silab
