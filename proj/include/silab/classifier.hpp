#pragma once

#include <optional>
#include <string>
#include <vector>

#include "silab/matrix.hpp"
#include "silab/scalar_solver.hpp"
#include "silab/word.hpp"

namespace silab {

enum class TriState { Yes, No, Unknown };
std::string tri_str(TriState t);

/// Invariants computed once per classification and echoed in reports.
struct InvariantReport {
  int dim = 0;
  int rank = 0;
  GaussianRational trace;
  Rational norm_sq;
  bool selfadjoint = false;
  bool normal = false;
  bool partial_isometry = false;
  PowerPartialIsometryResult power_partial_isometry{false, 0, 0};
};

/// Certificate word pair: left . T . right = T* by exact evaluation.
struct CertificateWords {
  Word left;
  Word right;
};

struct Verdict {
  TriState si = TriState::Unknown;
  TriState simple = TriState::Unknown;
  std::vector<std::string> basis;  // citation tags; non-empty when any verdict is definite
  std::optional<TraceNormWitness> witness;
  std::optional<CertificateWords> certificate;
  InvariantReport invariants;
  std::string note;
};

/// Classifies S(T, T*) by a first-match decision tree over exact
/// invariants: zero, selfadjoint, normal, rank one (trace zero / nonzero),
/// power partial isometry, otherwise unknown.
Verdict classify(const ExactMatrix& t);

/// Norm-based early rejection for nonselfadjoint rank-one generators whose
/// semigroup elements all have norm < 1: no SI semigroup can consist of
/// elements of norm below one. Returns the rejection verdict when the
/// argument applies, nullopt otherwise.
std::optional<Verdict> quick_reject(const ExactMatrix& t);

/// Direct-sum combination for unital factors: the sum is SI iff both
/// factors are; it is simple when both factors are simple, unital and
/// zero-free. Throws unless both factors are declared unital.
Verdict combine_direct_sum(const Verdict& v1, bool unital1, bool zero_free1,
                           const Verdict& v2, bool unital2, bool zero_free2);

}  // namespace silab
