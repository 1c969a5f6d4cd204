#include "sphalg/arith.hpp"

#include "sphalg/errors.hpp"

namespace sphalg {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw DivisionByZero();
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt double_factorial(long b) {
  if (b < -1) throw PreconditionError("double_factorial: argument must be >= -1, got " + std::to_string(b));
  BigInt acc = 1;
  for (long k = b; k > 1; k -= 2) acc *= k;
  return acc;
}

BigInt factorial(long n) {
  if (n < 0) throw PreconditionError("factorial: negative argument");
  BigInt acc;
  mpz_fac_ui(acc.get_mpz_t(), static_cast<unsigned long>(n));
  return acc;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt acc;
  mpz_bin_uiui(acc.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return acc;
}

GaussianRational GaussianRational::inv() const {
  if (is_zero()) throw DivisionByZero();
  BigRational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  BigRational re = re_ * o.re_ - im_ * o.im_;
  BigRational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inv();
}

namespace {

std::string imag_text(const BigRational& im) {
  // Magnitude only; the caller places the sign.
  BigRational a = abs(im);
  if (a == 1) return "i";
  return a.get_str() + "*i";
}

}  // namespace

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) {
    out = re_.get_str();
    out += sgn(im_) < 0 ? "-" : "+";
  } else if (sgn(im_) < 0) {
    out = "-";
  }
  return out + imag_text(im_);
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace sphalg
