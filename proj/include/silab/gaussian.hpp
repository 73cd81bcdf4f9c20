#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "silab/rational.hpp"

namespace silab {

/// Complex number with rational real and imaginary parts. Closed under
/// +, *, conjugation and exact division by nonzero values.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long re_num, long re_den) : re_(re_num, re_den) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }

  /// |z|^2 = re^2 + im^2, an exact Rational.
  Rational abs_sq() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational operator+(const GaussianRational& o) const {
    return {re_ + o.re_, im_ + o.im_};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re_ - o.re_, im_ - o.im_};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
  }
  GaussianRational operator*(const Rational& c) const { return {re_ * c, im_ * c}; }
  GaussianRational operator/(const GaussianRational& o) const {
    Rational n = o.abs_sq();
    if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    GaussianRational t = *this * o.conj();
    return {t.re_ / n, t.im_ / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    *this = *this * o;
    return *this;
  }

  bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  GaussianRational pow(std::uint64_t e) const {
    GaussianRational acc(1);
    GaussianRational base = *this;
    while (e != 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  /// Canonical rendering, e.g. "0", "3/5", "-i", "2i", "3/5+4/5i", "1-i".
  /// parse_entry accepts every string this produces.
  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string im_part;
    Rational mag = im_.abs();
    if (mag.is_one()) {
      im_part = "i";
    } else {
      im_part = mag.str() + "i";
    }
    if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + im_part;
    return re_.str() + (im_.sign() < 0 ? "-" : "+") + im_part;
  }

 private:
  Rational re_;
  Rational im_;
};

inline GaussianRational operator*(const Rational& c, const GaussianRational& z) {
  return z * c;
}

}  // namespace silab
