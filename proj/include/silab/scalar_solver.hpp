#pragma once

#include <cstdint>
#include <optional>

#include "silab/gaussian.hpp"

namespace silab {

/// Solutions (p, l) of r^p * s^(2l) = 1 over positive integers.
/// None: no solution. All: r = s = 1 so every (p, l) works.
/// Minimal(p0, l0): the solution set is exactly {(k*p0, k*l0) : k >= 1}.
struct ModulusSolution {
  enum class Kind { None, All, Minimal } kind;
  std::uint64_t p0 = 0;
  std::uint64_t l0 = 0;
};

/// The set D = {d >= 0 : a^d is a positive real}. ZeroOnly means D = {0};
/// Arithmetic(delta) means D = {0, delta, 2*delta, ...}.
struct PositivityProgression {
  enum class Kind { ZeroOnly, Arithmetic } kind;
  std::uint64_t delta = 0;
};

/// Exponents (m, n, l) with a^m * conj(a)^n * s^l = 1 exactly,
/// m, n >= 0, m + n >= 1, l >= 1.
struct TraceNormWitness {
  std::uint64_t m;
  std::uint64_t n;
  std::uint64_t l;
};

/// Factors r and s into primes and solves p*e_i + 2l*f_i = 0 for all i over
/// positive integers. Requires r, s > 0.
ModulusSolution minimal_modulus_solution(const Rational& r, const Rational& s);

/// Decides the positivity progression of a != 0 via the root-of-unity
/// classification of Gaussian rationals on the unit circle: w = a/conj(a)
/// has modulus one, and the only Gaussian-rational roots of unity are
/// {1, -1, i, -i}. If w is not one of those, only d = 0 makes a^d a
/// positive real. Otherwise let t = ord(w) in {1, 2, 4}; a^t is real, and
/// the progression step is t when a^t > 0 and 2t when a^t < 0.
PositivityProgression positivity_progression(const GaussianRational& a);

/// Decides the trace-norm condition: does some (m, n, l) with m, n >= 0,
/// m or n >= 1, l >= 1 satisfy a^m * conj(a)^n * s^l = 1? Witnesses are
/// minimized lexicographically in (l, m+n, |m-n|) and re-verified by exact
/// evaluation before being returned.
std::optional<TraceNormWitness> decide_trace_norm(const GaussianRational& a, const Rational& s);

/// Exact evaluation of a^m * conj(a)^n * s^l = 1.
bool verify_witness(const GaussianRational& a, const Rational& s, const TraceNormWitness& w);

}  // namespace silab
