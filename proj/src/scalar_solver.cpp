#include "silab/scalar_solver.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace silab {

namespace {

void factor_pollard(const mpz_class& n, std::map<mpz_class, long>& out, long mult);

// Trial division up to 2^20, then Miller-Rabin plus Pollard's rho for any
// large cofactor, so the solver stays exact beyond desk-scale inputs.
void factor_into(mpz_class n, std::map<mpz_class, long>& out, long mult) {
  if (n <= 0) throw std::invalid_argument("factor_into: value must be positive");
  while (mpz_even_p(n.get_mpz_t())) {
    out[2] += mult;
    n /= 2;
  }
  for (mpz_class d = 3; d <= (1 << 20) && d * d <= n; d += 2) {
    while (n % d == 0) {
      out[d] += mult;
      n /= d;
    }
  }
  if (n > 1) factor_pollard(n, out, mult);
}

mpz_class pollard_rho(const mpz_class& n) {
  // Brent's cycle variant; n is odd, composite, with no factor below 2^20.
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // cycle without factor; retry with next c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_pollard(const mpz_class& n, std::map<mpz_class, long>& out, long mult) {
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    out[n] += mult;
    return;
  }
  mpz_class d = pollard_rho(n);
  factor_pollard(d, out, mult);
  factor_pollard(mpz_class(n / d), out, mult);
}

std::map<mpz_class, long> factor_rational(const Rational& r) {
  std::map<mpz_class, long> out;
  factor_into(r.numerator(), out, 1);
  factor_into(r.denominator(), out, -1);
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

std::uint64_t to_u64(const mpz_class& z) {
  if (z < 0 || !z.fits_ulong_p()) throw std::overflow_error("exponent out of range");
  return z.get_ui();
}

bool in_progression(const PositivityProgression& prog, std::uint64_t d) {
  if (d == 0) return true;
  return prog.kind == PositivityProgression::Kind::Arithmetic && d % prog.delta == 0;
}

// Smallest d in D with d <= p and d == p (mod 2), if any.
std::optional<std::uint64_t> smallest_compatible_d(const PositivityProgression& prog,
                                                   std::uint64_t p) {
  for (std::uint64_t d = p % 2; d <= p; d += 2) {
    if (in_progression(prog, d)) return d;
  }
  return std::nullopt;
}

TraceNormWitness make_witness(std::uint64_t p, std::uint64_t d, std::uint64_t l) {
  return TraceNormWitness{(p + d) / 2, (p - d) / 2, l};
}

// Post-hoc consistency with the equivalent polar form of the condition:
// the modulus part |a|^(m+n) s^l = 1 must hold on its own, and for m != n
// the argument part must vanish, i.e. a^|m-n| is a positive real.
void assert_polar_form(const GaussianRational& a, const Rational& s, const TraceNormWitness& w) {
  if (!(a.abs_sq().pow(w.m + w.n) * s.pow(2 * w.l)).is_one())
    throw std::logic_error("trace-norm solver: modulus identity violated");
  if (w.m == w.n) return;
  std::uint64_t d = w.m > w.n ? w.m - w.n : w.n - w.m;
  GaussianRational ad = a.pow(d);
  if (!ad.is_real() || ad.re().sign() <= 0)
    throw std::logic_error("trace-norm solver: argument identity violated");
}

}  // namespace

ModulusSolution minimal_modulus_solution(const Rational& r, const Rational& s) {
  if (r.sign() <= 0 || s.sign() <= 0)
    throw std::invalid_argument("minimal_modulus_solution: r, s must be positive");

  const auto er = factor_rational(r);
  const auto fs = factor_rational(s);
  if (er.empty() && fs.empty()) return {ModulusSolution::Kind::All};

  // p*e_i + 2l*f_i = 0 forces p/(2l) = -f_i/e_i, the same positive ratio at
  // every prime; any prime present in only one of r, s kills solvability.
  std::optional<Rational> ratio;
  std::set<mpz_class> primes;
  for (const auto& [prime, e] : er) primes.insert(prime);
  for (const auto& [prime, f] : fs) primes.insert(prime);
  for (const auto& prime : primes) {
    long e = er.count(prime) ? er.at(prime) : 0;
    long f = fs.count(prime) ? fs.at(prime) : 0;
    if (e == 0 || f == 0) return {ModulusSolution::Kind::None};
    Rational c(mpz_class(-f), mpz_class(e));
    if (c.sign() <= 0) return {ModulusSolution::Kind::None};
    if (ratio && *ratio != c) return {ModulusSolution::Kind::None};
    ratio = c;
  }

  // ratio = u/v in lowest terms; p = u*t and 2l = v*t, t minimal so that
  // v*t is even.
  std::uint64_t u = to_u64(ratio->numerator());
  std::uint64_t v = to_u64(ratio->denominator());
  if (v % 2 == 0) return {ModulusSolution::Kind::Minimal, u, v / 2};
  return {ModulusSolution::Kind::Minimal, 2 * u, v};
}

PositivityProgression positivity_progression(const GaussianRational& a) {
  if (a.is_zero()) throw std::invalid_argument("positivity_progression: a must be nonzero");
  const GaussianRational w = a / a.conj();

  std::uint64_t order;
  if (w == GaussianRational(1)) {
    order = 1;
  } else if (w == GaussianRational(-1)) {
    order = 2;
  } else if (w == GaussianRational::i() || w == -GaussianRational::i()) {
    order = 4;
  } else {
    return {PositivityProgression::Kind::ZeroOnly};
  }

  GaussianRational at = a.pow(order);
  if (!at.is_real()) throw std::logic_error("positivity_progression: a^t not real");
  if (at.re().sign() > 0) return {PositivityProgression::Kind::Arithmetic, order};
  return {PositivityProgression::Kind::Arithmetic, 2 * order};
}

std::optional<TraceNormWitness> decide_trace_norm(const GaussianRational& a, const Rational& s) {
  if (a.is_zero()) throw std::invalid_argument("decide_trace_norm: a must be nonzero");
  if (s.sign() <= 0) throw std::invalid_argument("decide_trace_norm: s must be positive");

  const Rational r = a.abs_sq();
  const ModulusSolution mod = minimal_modulus_solution(r, s);
  if (mod.kind == ModulusSolution::Kind::None) return std::nullopt;

  const PositivityProgression prog = positivity_progression(a);

  std::optional<TraceNormWitness> witness;
  if (mod.kind == ModulusSolution::Kind::All) {
    // r = s = 1: l = 1 is always minimal; p = 2 with d = 0 always works,
    // p = 1 works exactly when a itself is a positive real (i.e. a = 1).
    for (std::uint64_t p = 1; p <= 2 && !witness; ++p) {
      if (auto d = smallest_compatible_d(prog, p)) witness = make_witness(p, *d, 1);
    }
  } else {
    // Solutions of the modulus equation are (k*p0, k*l0); d = 0 fits as
    // soon as k*p0 is even, so k <= 2 always suffices. The wider scan bound
    // keeps the search honest if that argument ever grows a hole.
    std::uint64_t kmax = std::max<std::uint64_t>(2, mod.p0 * std::max<std::uint64_t>(prog.delta, 1));
    for (std::uint64_t k = 1; k <= kmax && !witness; ++k) {
      std::uint64_t p = k * mod.p0;
      std::uint64_t l = k * mod.l0;
      if (auto d = smallest_compatible_d(prog, p)) witness = make_witness(p, *d, l);
    }
  }
  if (!witness) return std::nullopt;

  if (!verify_witness(a, s, *witness))
    throw std::logic_error("decide_trace_norm: witness failed exact re-verification");
  assert_polar_form(a, s, *witness);
  return witness;
}

bool verify_witness(const GaussianRational& a, const Rational& s, const TraceNormWitness& w) {
  GaussianRational v = a.pow(w.m) * a.conj().pow(w.n) * GaussianRational(s.pow(w.l), Rational(0));
  return v.is_one();
}

}  // namespace silab
