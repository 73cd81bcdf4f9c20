#include "silab/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace silab {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("ExactMatrix: dimensions must be positive");
  e_.assign(static_cast<size_t>(rows) * cols, GaussianRational());
}

ExactMatrix::ExactMatrix(int rows, int cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("ExactMatrix: dimensions must be positive");
  if (e_.size() != static_cast<size_t>(rows) * cols)
    throw std::invalid_argument("ExactMatrix: entry count does not match dimensions");
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
  if (rows.size() == 0) throw std::invalid_argument("ExactMatrix: empty literal");
  cols_ = static_cast<int>(rows.begin()->size());
  if (cols_ == 0) throw std::invalid_argument("ExactMatrix: empty row");
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw std::invalid_argument("ExactMatrix: ragged literal");
    for (const auto& v : r) e_.push_back(v);
  }
}

ExactMatrix ExactMatrix::identity(int dim) {
  ExactMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const { return mat_mul(*this, o); }

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("ExactMatrix: dimension mismatch in +");
  ExactMatrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("ExactMatrix: dimension mismatch in -");
  ExactMatrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

ExactMatrix ExactMatrix::scaled(const GaussianRational& c) const {
  ExactMatrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
  return r;
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  ExactMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const GaussianRational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return r;
}

ExactMatrix adjoint(const ExactMatrix& a) {
  ExactMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j).conj();
  return r;
}

ExactMatrix mat_pow(const ExactMatrix& a, std::uint64_t n) {
  if (!a.is_square()) throw std::invalid_argument("mat_pow: non-square matrix");
  ExactMatrix acc = ExactMatrix::identity(a.rows());
  ExactMatrix base = a;
  while (n != 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

namespace {

// Entries of one row scaled by the lcm of the denominators, as Gaussian
// integers represented by rational values with denominator 1. Scaling a row
// by a positive integer leaves the rank unchanged.
void clear_row_denominators(std::vector<GaussianRational>& row) {
  mpz_class l(1);
  for (const auto& v : row) {
    mpz_class d1 = v.re().denominator();
    mpz_class d2 = v.im().denominator();
    mpz_class g;
    mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), d1.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), g.get_mpz_t(), d2.get_mpz_t());
  }
  if (l == 1) return;
  GaussianRational c(Rational(l, mpz_class(1)), Rational(0));
  for (auto& v : row) v = v * c;
}

}  // namespace

int rank(const ExactMatrix& a) {
  const int m = a.rows();
  const int n = a.cols();
  std::vector<std::vector<GaussianRational>> w(m);
  for (int i = 0; i < m; ++i) {
    w[i].reserve(n);
    for (int j = 0; j < n; ++j) w[i].push_back(a.at(i, j));
    clear_row_denominators(w[i]);
  }

  // Bareiss: w[i][j] <- (w[r][c]*w[i][j] - w[i][c]*w[r][j]) / prev_pivot.
  // The divisions are exact over the Gaussian integers.
  GaussianRational prev(1);
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int pivot = -1;
    for (int i = r; i < m; ++i) {
      if (!w[i][c].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(w[r], w[pivot]);
    for (int i = r + 1; i < m; ++i) {
      for (int j = c + 1; j < n; ++j) {
        w[i][j] = (w[r][c] * w[i][j] - w[i][c] * w[r][j]) / prev;
      }
      w[i][c] = GaussianRational(0);
    }
    prev = w[r][c];
    ++r;
  }
  return r;
}

GaussianRational trace(const ExactMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("trace: non-square matrix");
  GaussianRational t(0);
  for (int i = 0; i < a.rows(); ++i) t += a.at(i, i);
  return t;
}

Rational frobenius_norm_sq(const ExactMatrix& a) {
  Rational s(0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += a.at(i, j).abs_sq();
  return s;
}

MatrixPredicates predicates(const ExactMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("predicates: non-square matrix");
  ExactMatrix as = adjoint(a);
  MatrixPredicates p{};
  p.selfadjoint = (a == as);
  p.normal = (as * a == a * as);
  p.partial_isometry = (a == a * as * a);
  p.idempotent = (a * a == a);
  return p;
}

PowerPartialIsometryResult is_power_partial_isometry(const ExactMatrix& a, int n_max) {
  if (!a.is_square()) throw std::invalid_argument("is_power_partial_isometry: non-square matrix");
  if (n_max < 1) throw std::invalid_argument("is_power_partial_isometry: n_max must be positive");
  ExactMatrix as = adjoint(a);
  ExactMatrix an = a;
  ExactMatrix asn = as;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      an = an * a;
      asn = asn * as;
    }
    if (an.is_zero()) break;  // all higher powers are 0, trivially partial isometries
    if (an != an * asn * an) return {false, n, n};
  }
  return {true, n_max, 0};
}

std::string canonical_key(const ExactMatrix& a) {
  std::ostringstream os;
  os << a.rows() << 'x' << a.cols() << '|';
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const GaussianRational& v = a.at(i, j);
      os << v.re().numerator().get_str() << '/' << v.re().denominator().get_str() << ','
         << v.im().numerator().get_str() << '/' << v.im().denominator().get_str() << ';';
    }
  }
  return os.str();
}

}  // namespace silab
