#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "silab/gaussian.hpp"

namespace silab {

/// Dense matrix over the Gaussian rationals, row-major. Equality is
/// entrywise exact equality. Immutable in spirit: operations return
/// new values.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols);
  ExactMatrix(int rows, int cols, std::vector<GaussianRational> entries);
  /// Row-major brace construction for literals in tests and the corpus.
  ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static ExactMatrix zero(int rows, int cols) { return ExactMatrix(rows, cols); }
  static ExactMatrix identity(int dim);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const GaussianRational& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
  GaussianRational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const GaussianRational& c) const;

 private:
  int rows_;
  int cols_;
  std::vector<GaussianRational> e_;
};

struct MatrixPredicates {
  bool selfadjoint;
  bool normal;
  bool partial_isometry;
  bool idempotent;
};

/// Outcome of the bounded power-partial-isometry check. `verified` means
/// every power up to `checked_up_to` passed; the bound is recorded because
/// no finite certificate bound is known (the classifier treats a verified
/// result as true and the report carries the bound).
struct PowerPartialIsometryResult {
  bool verified;
  int checked_up_to;
  int failed_at;  // 0 when verified
};

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix adjoint(const ExactMatrix& a);
ExactMatrix mat_pow(const ExactMatrix& a, std::uint64_t n);

/// Exact rank via fraction-free (Bareiss) elimination after clearing row
/// denominators; intermediate entries stay integral, bounding coefficient
/// blowup.
int rank(const ExactMatrix& a);

GaussianRational trace(const ExactMatrix& a);

/// Sum of |entry|^2. For rank-one matrices this equals the operator norm
/// squared (single nonzero singular value); the classifiers consume it only
/// for rank-one inputs under that contract.
Rational frobenius_norm_sq(const ExactMatrix& a);

MatrixPredicates predicates(const ExactMatrix& a);

PowerPartialIsometryResult is_power_partial_isometry(const ExactMatrix& a, int n_max);

/// Injective serialization of dims + lowest-terms entries; equal matrices
/// have equal keys and distinct matrices distinct keys.
std::string canonical_key(const ExactMatrix& a);

}  // namespace silab
