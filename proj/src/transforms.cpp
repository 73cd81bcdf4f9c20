#include "silab/transforms.hpp"

#include <array>
#include <stdexcept>

namespace silab {

ExactUnitary::ExactUnitary(ExactMatrix u) : u_(std::move(u)) {
  if (!u_.is_square()) throw std::invalid_argument("ExactUnitary: non-square matrix");
  ExactMatrix id = ExactMatrix::identity(u_.rows());
  ExactMatrix us = adjoint(u_);
  if (us * u_ != id || u_ * us != id)
    throw std::invalid_argument("ExactUnitary: matrix is not exactly unitary");
}

ExactMatrix rank_one_from_vectors(const std::vector<GaussianRational>& f,
                                  const std::vector<GaussianRational>& g) {
  if (f.size() != g.size())
    throw std::invalid_argument("rank_one_from_vectors: dimension mismatch");
  if (f.empty()) throw std::invalid_argument("rank_one_from_vectors: empty vectors");
  auto zero = [](const std::vector<GaussianRational>& v) {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  };
  if (zero(f) || zero(g)) throw std::invalid_argument("rank_one_from_vectors: zero vector");
  const int n = static_cast<int>(f.size());
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = f[i] * g[j].conj();
  return m;
}

namespace {

struct BitStream {
  // xorshift64; seeded with a multiplied seed so that seed 0 yields the
  // all-zero stream (identity phases, first Pythagorean pair, no flips).
  std::uint64_t state;
  explicit BitStream(std::uint64_t seed) : state(seed * 0x9E3779B97F4A7C15ULL) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
};

constexpr std::array<std::array<long, 3>, 6> kPythagorean = {{
    {3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {20, 21, 29}, {9, 40, 41}}};

GaussianRational fourth_root(std::uint64_t e) {
  switch (e % 4) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::i();
    case 2: return GaussianRational(-1);
    default: return -GaussianRational::i();
  }
}

}  // namespace

ExactUnitary exact_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("exact_unitary: dim must be positive");
  BitStream bits(seed);

  ExactMatrix u(dim, dim);
  for (int j = 0; j < dim; ++j) u.at(j, j) = fourth_root(bits.next());

  for (int i = 0; i + 1 < dim; ++i) {
    const auto& pq = kPythagorean[bits.next() % kPythagorean.size()];
    Rational c(pq[0], pq[2]);
    Rational s(pq[1], pq[2]);
    if (bits.next() % 2 == 1) s = -s;
    ExactMatrix rot = ExactMatrix::identity(dim);
    rot.at(i, i) = GaussianRational(c, Rational(0));
    rot.at(i, i + 1) = GaussianRational(s, Rational(0));
    rot.at(i + 1, i) = GaussianRational(-s, Rational(0));
    rot.at(i + 1, i + 1) = GaussianRational(c, Rational(0));
    u = u * rot;
  }
  return ExactUnitary(u);
}

ExactMatrix conjugate(const ExactMatrix& t, const ExactUnitary& u) {
  if (t.rows() != u.matrix().rows() || !t.is_square())
    throw std::invalid_argument("conjugate: dimension mismatch");
  return u.matrix() * t * adjoint(u.matrix());
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

std::pair<ExactMatrix, ExactMatrix> similarity_counterexample() {
  ExactMatrix p{{GaussianRational(1), GaussianRational(0)},
                {GaussianRational(0), GaussianRational(0)}};
  ExactMatrix a{{GaussianRational(1), GaussianRational(-1)},
                {GaussianRational(0), GaussianRational(0)}};
  ExactMatrix s{{GaussianRational(1), GaussianRational(1)},
                {GaussianRational(0), GaussianRational(1)}};
  ExactMatrix s_inv{{GaussianRational(1), GaussianRational(-1)},
                    {GaussianRational(0), GaussianRational(1)}};
  if (s * s_inv != ExactMatrix::identity(2))
    throw std::logic_error("similarity_counterexample: inverse check failed");
  if (s * p * s_inv != a)
    throw std::logic_error("similarity_counterexample: similarity identity failed");
  return {p, a};
}

}  // namespace silab
