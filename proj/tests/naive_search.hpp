#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "silab/scalar_solver.hpp"

namespace silab::testing {

/// Independent brute-force search for a trace-norm witness with
/// m, n <= mn_bound and l <= l_bound. A floating log prefilter skips
/// candidates whose magnitudes are far from 1 (exact solutions have log
/// exactly 0, far beyond float error at these scales); every surviving
/// candidate is confirmed by exact arithmetic.
inline std::optional<TraceNormWitness> naive_trace_norm_search(const GaussianRational& a,
                                                               const Rational& s,
                                                               std::uint64_t mn_bound,
                                                               std::uint64_t l_bound) {
  const double log_r = std::log(a.abs_sq().to_double());
  const double log_s = std::log(s.to_double());
  for (std::uint64_t l = 1; l <= l_bound; ++l) {
    for (std::uint64_t m = 0; m <= mn_bound; ++m) {
      for (std::uint64_t n = 0; n <= mn_bound; ++n) {
        if (m + n == 0) continue;
        double log_mag = 0.5 * static_cast<double>(m + n) * log_r + static_cast<double>(l) * log_s;
        if (std::fabs(log_mag) > 1e-6) continue;
        TraceNormWitness w{m, n, l};
        if (verify_witness(a, s, w)) return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace silab::testing
