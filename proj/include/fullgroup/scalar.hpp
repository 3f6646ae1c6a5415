#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace fullgroup {

/// Exact rational number; always kept in canonical (reduced) form.
using Rational = mpq_class;

/// num/den in canonical form.  Throws std::invalid_argument when den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "3", "-3", "3/2".  Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& value);

/// Complex number a + b*i with exact rational parts: the coefficient field of
/// every algebra in this library.  Conjugation implements the scalar half of
/// the *-involutions upstairs, so it must be exact -- no floating point here.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(int value) : re_(value), im_(0) {}   // NOLINT: implicit by design
  GaussianRational(long value) : re_(value), im_(0) {}  // NOLINT
  GaussianRational(Rational real) : re_(std::move(real)), im_(0) {}  // NOLINT
  GaussianRational(Rational real, Rational imag)
      : re_(std::move(real)), im_(std::move(imag)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  /// |z|^2 = re^2 + im^2, exact.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  /// Exact division; throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
    return a /= b;
  }
  friend GaussianRational operator-(const GaussianRational& a) {
    return {-a.re_, -a.im_};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  /// Canonical literal: "0", "-3/2", "i", "-2i/3", "1/2+i", "2-3i/5".
  /// parse_gaussian() accepts exactly what str() produces (plus "3/5i" forms).
  std::string str() const;

 private:
  Rational re_, im_;
};

GaussianRational parse_gaussian(const std::string& text);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace fullgroup
