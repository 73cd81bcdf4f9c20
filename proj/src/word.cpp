#include "silab/word.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace silab {

Word word_adjoint(const Word& w) {
  Word r;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(*it == Letter::X ? Letter::Xstar : Letter::X);
  return r;
}

Word parse_word(const std::string& text) {
  Word w;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == 'T')
      w.letters.push_back(Letter::X);
    else if (c == 't')
      w.letters.push_back(Letter::Xstar);
    else
      throw std::invalid_argument("parse_word: invalid letter '" + std::string(1, c) +
                                  "' at position " + std::to_string(i) + " (expected T or t)");
  }
  if (w.letters.empty()) throw std::invalid_argument("parse_word: word must be non-empty");
  return w;
}

std::string word_str(const Word& w) {
  std::string s;
  for (Letter l : w.letters) s += (l == Letter::X ? 'T' : 't');
  return s;
}

bool ScaledMonomial::operator<(const ScaledMonomial& o) const {
  return std::tie(base, p, q, k) < std::tie(o.base, o.p, o.q, o.k);
}

ScaledMonomial monomial_adjoint(const ScaledMonomial& sm) {
  // (a^p abar^q s^k B)* = abar^p a^q s^k B*; TT* and T*T are selfadjoint.
  ScaledMonomial r{sm.q, sm.p, sm.k, sm.base};
  switch (sm.base) {
    case MonomialBase::T: r.base = MonomialBase::Tstar; break;
    case MonomialBase::Tstar: r.base = MonomialBase::T; break;
    case MonomialBase::TTstar:
    case MonomialBase::TstarT:
    case MonomialBase::Zero:
      break;
  }
  return r;
}

std::string monomial_str(const ScaledMonomial& sm) {
  if (sm.base == MonomialBase::Zero) return "0";
  std::ostringstream os;
  if (sm.p > 0) os << "a^" << sm.p << " ";
  if (sm.q > 0) os << "abar^" << sm.q << " ";
  if (sm.k > 0) os << "s^" << sm.k << " ";
  switch (sm.base) {
    case MonomialBase::T: os << "T"; break;
    case MonomialBase::Tstar: os << "T*"; break;
    case MonomialBase::TTstar: os << "TT*"; break;
    case MonomialBase::TstarT: os << "T*T"; break;
    case MonomialBase::Zero: break;
  }
  return os.str();
}

ScaledMonomial reduce_rank_one(const Word& w, const RankOneProfile& prof) {
  if (w.letters.empty()) throw std::invalid_argument("reduce_rank_one: empty word");
  const bool a_zero = prof.a.is_zero();

  ScaledMonomial m;
  m.base = w.letters.front() == Letter::X ? MonomialBase::T : MonomialBase::Tstar;

  for (size_t i = 1; i < w.letters.size(); ++i) {
    const bool x = (w.letters[i] == Letter::X);
    if (m.base == MonomialBase::Zero) break;
    switch (m.base) {
      case MonomialBase::T:
        if (x) {
          // T T = a T
          if (a_zero) { m = ScaledMonomial{}; break; }
          ++m.p;
        } else {
          m.base = MonomialBase::TTstar;
        }
        break;
      case MonomialBase::Tstar:
        if (x) {
          m.base = MonomialBase::TstarT;
        } else {
          // T* T* = conj(a) T*
          if (a_zero) { m = ScaledMonomial{}; break; }
          ++m.q;
        }
        break;
      case MonomialBase::TTstar:
        if (x) {
          // (TT*) T = s T
          ++m.k;
          m.base = MonomialBase::T;
        } else {
          // (TT*) T* = T (T* T*) = conj(a) TT*
          if (a_zero) { m = ScaledMonomial{}; break; }
          ++m.q;
        }
        break;
      case MonomialBase::TstarT:
        if (x) {
          // (T*T) T = T* (T T) = a T*T
          if (a_zero) { m = ScaledMonomial{}; break; }
          ++m.p;
        } else {
          // (T*T) T* = s T*
          ++m.k;
          m.base = MonomialBase::Tstar;
        }
        break;
      case MonomialBase::Zero:
        break;
    }
  }
  return m;
}

ExactMatrix evaluate_word(const Word& w, const ExactMatrix& t) {
  if (!t.is_square()) throw std::invalid_argument("evaluate_word: non-square matrix");
  if (w.letters.empty()) throw std::invalid_argument("evaluate_word: empty word");
  const ExactMatrix ts = adjoint(t);
  ExactMatrix acc = w.letters.front() == Letter::X ? t : ts;
  for (size_t i = 1; i < w.letters.size(); ++i)
    acc = acc * (w.letters[i] == Letter::X ? t : ts);
  return acc;
}

ExactMatrix monomial_value(const ScaledMonomial& sm, const ExactMatrix& t) {
  RankOneProfile prof = profile(t);  // throws NotRankOneError when rank != 1
  if (sm.base == MonomialBase::Zero) return ExactMatrix::zero(t.rows(), t.cols());
  GaussianRational scalar =
      prof.a.pow(sm.p) * prof.a.conj().pow(sm.q) * GaussianRational(prof.s.pow(sm.k), Rational(0));
  const ExactMatrix ts = adjoint(t);
  switch (sm.base) {
    case MonomialBase::T: return t.scaled(scalar);
    case MonomialBase::Tstar: return ts.scaled(scalar);
    case MonomialBase::TTstar: return (t * ts).scaled(scalar);
    case MonomialBase::TstarT: return (ts * t).scaled(scalar);
    case MonomialBase::Zero: break;
  }
  return ExactMatrix::zero(t.rows(), t.cols());
}

bool monomial_shape_in_list(const ScaledMonomial& sm, bool trace_is_zero) {
  if (trace_is_zero) {
    // {0, T, T*, s^j TT*, s^j T*T, s^j T, s^j T*}: no a or conj(a) factors.
    if (sm.base == MonomialBase::Zero) return sm.p == 0 && sm.q == 0 && sm.k == 0;
    return sm.p == 0 && sm.q == 0;
  }
  switch (sm.base) {
    case MonomialBase::Zero:
      return false;  // 0 is not an element of S(T, T*) when a != 0
    case MonomialBase::T:
      // a^n T, or a^p conj(a)^q s^k T with k >= 1
      return sm.k >= 1 || sm.q == 0;
    case MonomialBase::Tstar:
      return sm.k >= 1 || sm.p == 0;
    case MonomialBase::TTstar:
    case MonomialBase::TstarT:
      return true;
  }
  return false;
}

std::vector<ScaledMonomial> enumerate_monomials(const RankOneProfile& prof,
                                                std::uint64_t max_total_degree) {
  std::vector<ScaledMonomial> out;
  const bool a_zero = prof.a.is_zero();
  const MonomialBase bases[] = {MonomialBase::T, MonomialBase::Tstar, MonomialBase::TTstar,
                                MonomialBase::TstarT};
  if (a_zero) out.push_back(ScaledMonomial{});  // zero belongs to S(T,T*) iff a = 0
  for (MonomialBase b : bases) {
    for (std::uint64_t p = 0; p <= max_total_degree; ++p) {
      for (std::uint64_t q = 0; p + q <= max_total_degree; ++q) {
        for (std::uint64_t k = 0; p + q + k <= max_total_degree; ++k) {
          ScaledMonomial sm{p, q, k, b};
          if (monomial_shape_in_list(sm, a_zero)) out.push_back(sm);
        }
      }
    }
  }
  return out;
}

}  // namespace silab
