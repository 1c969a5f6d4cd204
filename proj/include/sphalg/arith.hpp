#pragma once

// Exact scalars: arbitrary-precision integers and rationals (GMP), and the
// coefficient field Q(i) built on top of them.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

namespace sphalg {

using BigInt = mpz_class;

/// Always held in lowest terms with a positive denominator; gmpxx
/// canonicalizes the result of every arithmetic operator.
using BigRational = mpq_class;

/// Builds num/den in lowest terms. Throws DivisionByZero when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// b!! with 0!! = (-1)!! = 1. Rejects b < -1 with PreconditionError.
BigInt double_factorial(long b);

BigInt factorial(long n);
BigInt binomial(long n, long k);

/// a + b*i with a, b exact rationals.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT: integers embed implicitly
  GaussianRational(BigRational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(BigRational re, BigRational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

  const BigRational& re() const noexcept { return re_; }
  const BigRational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_one() const noexcept { return sgn(im_) == 0 && re_ == 1; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2.
  BigRational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inv() const;

  GaussianRational operator-() const { return {-re_, -im_}; }

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
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Text form `a/b`, `c/d*i`, `a/b+c/d*i`, `-i`, `0`; inverse of parse_scalar.
  std::string to_string() const;

 private:
  BigRational re_{0};
  BigRational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Parses the scalar text syntax (`3/2`, `-4`, `1/2*i`, `3/5+4/7*i`, `i`).
/// Throws ParseError on malformed input.
GaussianRational parse_scalar(const std::string& text);

}  // namespace sphalg
