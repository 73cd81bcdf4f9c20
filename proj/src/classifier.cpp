#include "silab/classifier.hpp"

#include <stdexcept>

#include "silab/rank_one.hpp"

namespace silab {

std::string tri_str(TriState t) {
  switch (t) {
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
    default: return "unknown";
  }
}

namespace {

InvariantReport compute_invariants(const ExactMatrix& t) {
  InvariantReport inv;
  inv.dim = t.rows();
  inv.rank = rank(t);
  inv.trace = trace(t);
  inv.norm_sq = frobenius_norm_sq(t);
  MatrixPredicates p = predicates(t);
  inv.selfadjoint = p.selfadjoint;
  inv.normal = p.normal;
  inv.partial_isometry = p.partial_isometry;
  inv.power_partial_isometry = is_power_partial_isometry(t, 2 * t.rows());
  return inv;
}

// T* = T* T T* holds for every partial isometry; attach the pair only when
// it verifies exactly on this matrix.
std::optional<CertificateWords> adjoint_certificate(const ExactMatrix& t) {
  CertificateWords c{Word{{Letter::Xstar}}, Word{{Letter::Xstar}}};
  if (adjoint(t) * t * adjoint(t) == adjoint(t)) return c;
  return std::nullopt;
}

void enforce_monotone(Verdict& v) {
  if (v.simple == TriState::Yes && v.si != TriState::Yes)
    throw std::logic_error("classifier: simple = yes requires si = yes");
  if (v.si == TriState::No) v.simple = TriState::No;
}

}  // namespace

Verdict classify(const ExactMatrix& t) {
  if (!t.is_square()) throw std::invalid_argument("classify: non-square matrix");

  Verdict v;
  v.invariants = compute_invariants(t);
  const InvariantReport& inv = v.invariants;

  // (0) zero matrix: S = {0} and {0} is always a selfadjoint ideal.
  if (t.is_zero()) {
    v.si = v.simple = TriState::Yes;
    v.basis = {"zero convention"};
    return v;
  }

  // (1) selfadjoint: every element of S(T) is selfadjoint, so SI holds
  // trivially; S(T) is simple iff T^n = T for some n >= 2, which for a
  // selfadjoint matrix is equivalent to T^2 = T or T^3 = T.
  if (inv.selfadjoint) {
    v.si = TriState::Yes;
    v.basis = {"Remark Rsa(i)"};
    bool cyclic = (t * t == t) || (t * t * t == t);
    v.simple = cyclic ? TriState::Yes : TriState::No;
    v.basis.push_back("derived-selfadjoint-criterion");
    if (inv.rank == 1) v.basis.push_back("Theorem Tsa");
    enforce_monotone(v);
    return v;
  }

  // (2) normal nonselfadjoint: SI iff simple iff T is (unitarily) a
  // unitary direct-sum zero, detected by idempotence of T*T.
  if (inv.normal) {
    ExactMatrix tst = adjoint(t) * t;
    bool ok = (tst * tst == tst);
    v.si = v.simple = ok ? TriState::Yes : TriState::No;
    v.basis = {"Theorem N2"};
    if (inv.rank == 1 && !inv.trace.is_zero()) v.basis.push_back("Theorem TN1");
    if (ok) v.certificate = adjoint_certificate(t);
    enforce_monotone(v);
    return v;
  }

  if (inv.rank == 1) {
    RankOneProfile prof{inv.trace, inv.norm_sq, inv.dim};

    // (3) rank one, trace zero (never normal): SI iff simple iff ||T|| = 1.
    if (prof.a.is_zero()) {
      bool ok = prof.s.is_one();
      v.si = v.simple = ok ? TriState::Yes : TriState::No;
      v.basis = {"Theorem TR1"};
      if (ok) v.certificate = adjoint_certificate(t);
      enforce_monotone(v);
      return v;
    }

    // (4) rank one, non-normal, trace nonzero.
    if (auto w = decide_trace_norm(prof.a, prof.s)) {
      if (prof.a.is_real() && prof.s.is_one())
        throw std::logic_error("classifier: trace-norm witness and ||T|| = 1 are mutually exclusive");
      v.si = v.simple = TriState::Yes;
      v.basis = {"Theorem TR2"};
      v.witness = w;
      enforce_monotone(v);
      return v;
    }
    if (prof.a.is_real() && prof.s.is_one()) {
      // Real trace on a non-normal rank-one partial isometry; the trace is
      // automatically outside {0, 1, -1} here.
      v.si = TriState::Yes;
      v.simple = TriState::No;
      v.basis = {"Theorem Tnonsimple"};
      v.certificate = adjoint_certificate(t);
      enforce_monotone(v);
      return v;
    }
    v.si = v.simple = TriState::No;
    v.basis = {"Theorem TR2"};
    enforce_monotone(v);
    return v;
  }

  // (5) higher-rank non-normal power partial isometry: SI always. For
  // simplicity, rank(T^dim) counts the non-nilpotent (unitary) part and
  // rank(T) - rank(T^dim) the truncated-shift part, both unitary
  // invariants; a nonzero shift part next to a nonzero unitary part is the
  // block-zero obstruction to simplicity. Pure shifts are left to the
  // oracle.
  if (inv.power_partial_isometry.verified) {
    v.si = TriState::Yes;
    v.basis = {"Corollary CPP"};
    v.certificate = adjoint_certificate(t);
    int stable_rank = rank(mat_pow(t, static_cast<std::uint64_t>(inv.dim)));
    if (stable_rank > 0 && inv.rank > stable_rank) {
      v.simple = TriState::No;
      v.basis.push_back("Example ENS");
    } else {
      v.simple = TriState::Unknown;
      v.note = stable_rank == 0
                   ? "nilpotent power partial isometry of rank >= 2: simplicity undecided, run the oracle"
                   : "power partial isometry without detected shift part: simplicity undecided, run the oracle";
    }
    enforce_monotone(v);
    return v;
  }

  // (6) outside every characterized class.
  v.note = "no characterization applies (non-normal, rank >= 2, not a verified power partial "
           "isometry); run the oracle";
  return v;
}

std::optional<Verdict> quick_reject(const ExactMatrix& t) {
  if (!t.is_square()) throw std::invalid_argument("quick_reject: non-square matrix");
  if (predicates(t).selfadjoint)
    throw std::invalid_argument("quick_reject: requires a nonselfadjoint matrix");
  if (rank(t) != 1) return std::nullopt;
  Rational s = frobenius_norm_sq(t);
  // s < 1 bounds |a|^2 <= s < 1, so every scalar in the semigroup list has
  // modulus < 1 and every element has norm < 1.
  if (s >= Rational(1)) return std::nullopt;
  Verdict v;
  v.invariants = compute_invariants(t);
  v.si = TriState::No;
  v.simple = TriState::No;
  v.basis = {"Remark R3(iii)", "Example EE"};
  v.note = "all semigroup elements have norm < 1";
  return v;
}

Verdict combine_direct_sum(const Verdict& v1, bool unital1, bool zero_free1,
                           const Verdict& v2, bool unital2, bool zero_free2) {
  if (!unital1 || !unital2)
    throw std::invalid_argument("combine_direct_sum: both factors must be declared unital");

  Verdict v;
  if (v1.si == TriState::No || v2.si == TriState::No)
    v.si = TriState::No;
  else if (v1.si == TriState::Yes && v2.si == TriState::Yes)
    v.si = TriState::Yes;
  else
    v.si = TriState::Unknown;
  v.basis = {"Proposition TDS"};

  if (v1.simple == TriState::Yes && v2.simple == TriState::Yes && zero_free1 && zero_free2 &&
      v.si == TriState::Yes) {
    v.simple = TriState::Yes;
    v.basis.push_back("Proposition T3(ii)");
  } else {
    v.simple = TriState::Unknown;
  }
  if (v.si == TriState::No) v.simple = TriState::No;
  return v;
}

}  // namespace silab
