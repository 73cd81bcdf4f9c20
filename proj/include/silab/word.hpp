#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "silab/rank_one.hpp"

namespace silab {

enum class Letter : std::uint8_t { X, Xstar };

/// Non-empty free word over {X, X*}. The adjoint reverses the sequence and
/// swaps the letters.
struct Word {
  std::vector<Letter> letters;

  bool operator==(const Word&) const = default;
};

Word word_adjoint(const Word& w);

/// Parses the CLI literal syntax: a string over {T, t}, T = X, t = X*.
Word parse_word(const std::string& text);
std::string word_str(const Word& w);

enum class MonomialBase : std::uint8_t { T, Tstar, TTstar, TstarT, Zero };

/// Normal form a^p conj(a)^q s^k * base of an element of S(T, T*) for
/// rank-one T. Symbolically canonical, but NOT canonical as an operator
/// value: distinct (p, q, k) can evaluate equal, so operator-level equality
/// must go through monomial_value.
struct ScaledMonomial {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t k = 0;
  MonomialBase base = MonomialBase::Zero;

  bool operator==(const ScaledMonomial&) const = default;
  bool operator<(const ScaledMonomial& o) const;
};

ScaledMonomial monomial_adjoint(const ScaledMonomial& sm);
std::string monomial_str(const ScaledMonomial& sm);

/// Reduces a word to its scaled monomial for a rank-one generator with the
/// given profile, by a single left-to-right pass of the absorption rules
///   T T = a T        T* T* = conj(a) T*       (TT*) T = s T
///   (T*T) T* = s T*  T (T*T) = s T            T* (TT*) = s T*
/// and T^2 = 0 when a = 0. Soundness is enforced by the evaluation
/// property test rather than an abstract confluence proof.
ScaledMonomial reduce_rank_one(const Word& w, const RankOneProfile& prof);

/// Ordered matrix product substituting T for X and adjoint(T) for X*.
ExactMatrix evaluate_word(const Word& w, const ExactMatrix& t);

/// Exact value a^p conj(a)^q s^k * base(T). Requires rank(T) = 1.
ExactMatrix monomial_value(const ScaledMonomial& sm, const ExactMatrix& t);

/// All monomials with p + q + k <= max_total_degree in the list shape that
/// applies to the profile: the trace-zero shape when a = 0 (which includes
/// the zero monomial), the general shape otherwise. Deterministic order.
std::vector<ScaledMonomial> enumerate_monomials(const RankOneProfile& prof,
                                                std::uint64_t max_total_degree);

/// True iff the monomial's shape occurs in the applicable list.
bool monomial_shape_in_list(const ScaledMonomial& sm, bool trace_is_zero);

}  // namespace silab
