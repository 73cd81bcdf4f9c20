#include "silab/rank_one.hpp"

namespace silab {

RankOneProfile profile(const ExactMatrix& t) {
  if (!t.is_square()) throw std::invalid_argument("profile: non-square matrix");
  if (rank(t) != 1) throw NotRankOneError("profile: matrix is not rank one");
  return {trace(t), frobenius_norm_sq(t), t.rows()};
}

std::pair<GaussianRational, Rational> canonical_form(const RankOneProfile& p) {
  return {p.a, p.s - p.a.abs_sq()};
}

bool is_normal_rank_one(const RankOneProfile& p) { return p.s == p.a.abs_sq(); }

bool ppi_rank_one(const RankOneProfile& p) {
  if (!p.s.is_one())
    throw std::invalid_argument("ppi_rank_one: requires ||T||^2 = 1 (a partial isometry)");
  return p.a.is_zero() || p.a.abs_sq().is_one();
}

bool pt3_check(const ExactMatrix& t, int n) {
  if (n < 1) throw std::invalid_argument("pt3_check: n must be positive");
  if (rank(t) != 1) throw NotRankOneError("pt3_check: matrix is not rank one");

  const ExactMatrix ts = adjoint(t);
  const ExactMatrix tst = ts * t;
  const ExactMatrix tts = t * ts;
  const Rational s = frobenius_norm_sq(t);
  const GaussianRational a = trace(t);
  const auto nu = static_cast<std::uint64_t>(n);

  const GaussianRational s_n{s.pow(nu), Rational(0)};
  const GaussianRational s_nm1{s.pow(nu - 1), Rational(0)};

  const ExactMatrix tst_n = mat_pow(tst, nu);
  const ExactMatrix tts_n = mat_pow(tts, nu);

  if (tst_n != tst.scaled(s_nm1)) return false;
  if (mat_pow(tst, 2 * nu) != tst_n.scaled(s_n)) return false;
  if (tst_n * ts != ts.scaled(s_n)) return false;
  if (tts_n != tts.scaled(s_nm1)) return false;
  if (mat_pow(tts, 2 * nu) != tts_n.scaled(s_n)) return false;
  if (tts_n * t != t.scaled(s_n)) return false;
  if (n > 1 && mat_pow(t, nu) != t.scaled(a.pow(nu - 1))) return false;
  return true;
}

}  // namespace silab
