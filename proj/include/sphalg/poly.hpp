#pragma once

// Sparse multivariate polynomials over Q(i) in a fixed number of
// indeterminates X_1..X_N.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sphalg/arith.hpp"

namespace sphalg {

/// Total degree with a distinct value for the zero polynomial, so that
/// deg(pq) = deg p + deg q holds without special cases.
class Degree {
 public:
  static constexpr Degree minus_infinity() { return Degree(); }
  static constexpr Degree finite(long d) { return Degree(d); }

  constexpr bool is_finite() const noexcept { return finite_; }
  /// Only meaningful when is_finite().
  constexpr long value() const noexcept { return value_; }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return minus_infinity();
    return Degree(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

 private:
  constexpr Degree() = default;
  constexpr explicit Degree(long d) : finite_(true), value_(d) {}

  bool finite_ = false;
  long value_ = 0;
};

/// Exponent vector X_1^{e_1} ... X_N^{e_N}.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t dim) : exps_(dim, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  std::size_t dim() const noexcept { return exps_.size(); }
  long degree() const noexcept;

  /// 0-based access.
  Exponent operator[](std::size_t k) const { return exps_[k]; }
  Exponent& operator[](std::size_t k) { return exps_[k]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  bool all_even() const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Canonical term order: higher total degree first, then lexicographically
/// larger exponent vectors first. Iterating a Poly follows this order.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Element of Q(i)[X_1..X_N]. No stored coefficient is ever zero; the zero
/// polynomial has an empty term map. Values are immutable once built.
///
/// Dimension 0 is permitted and models the scalars themselves (only the
/// empty monomial exists).
class Poly {
 public:
  using Terms = std::map<Monomial, GaussianRational, GrlexDescending>;

  Poly() = default;
  explicit Poly(std::size_t dim) : dim_(dim) {}

  static Poly constant(std::size_t dim, const GaussianRational& c);
  /// X_j for 1 <= j <= dim.
  static Poly variable(std::size_t dim, std::size_t j);
  static Poly term(const Monomial& m, const GaussianRational& c);

  std::size_t dim() const noexcept { return dim_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  Degree degree() const;
  GaussianRational coefficient(const Monomial& m) const;
  /// Value at the origin.
  GaussianRational constant_term() const;

  /// Accumulates c*m; drops the entry if the sum cancels.
  void add_term(const Monomial& m, const GaussianRational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const GaussianRational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GaussianRational& c) { return a *= c; }
  friend Poly operator*(const GaussianRational& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// Human-readable form in the polynomial text grammar.
  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  Terms terms_;

  friend class PolyBuilder;
};

/// Mutable accumulator used by kernels that emit many terms.
class PolyBuilder {
 public:
  explicit PolyBuilder(std::size_t dim) : poly_(dim) {}
  void add(const Monomial& m, const GaussianRational& c) { poly_.add_term(m, c); }
  void add(Monomial&& m, GaussianRational&& c);
  Poly build() && { return std::move(poly_); }

 private:
  Poly poly_;
};

void require_same_dim(const Poly& a, const Poly& b, const char* op);

Poly pow(const Poly& p, unsigned e);

/// X_1^2 + ... + X_N^2.
Poly x_dot_x(std::size_t dim);

/// The degree-d part of p (0 for d < 0).
Poly homogeneous_component(const Poly& p, long d);

/// Witness degree when every term shares one total degree; the zero
/// polynomial reports minus-infinity. nullopt when p is not homogeneous.
std::optional<Degree> homogeneous_degree(const Poly& p);
bool is_homogeneous(const Poly& p);

/// Degree of p in X_var (1-based); -1 for the zero polynomial.
long degree_in(const Poly& p, std::size_t var);

/// Coefficient of X_var^k, as a polynomial not involving X_var.
Poly coefficient_in(const Poly& p, std::size_t var, unsigned k);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Division with remainder by d, viewed as a polynomial in X_var over the
/// other variables. d must be monic in X_var.
/// Result: p = d*quotient + remainder with deg_var(remainder) < deg_var(d).
DivMod divmod_monic(const Poly& p, const Poly& d, std::size_t var);

/// p(images[0], ..., images[N-1]). All images share one dimension M, which is
/// the dimension of the result.
Poly substitute_linear(const Poly& p, std::span<const Poly> images);

/// p(X_1 + t_1, ..., X_N + t_N) in 2N variables, t_j stored at index N + j.
Poly shift(const Poly& p);

/// All monomials of total degree d in dim variables, in canonical order.
/// Empty for d < 0.
std::vector<Monomial> monomials_of_degree(std::size_t dim, long d);

/// Reinterprets p in a ring with more variables (new ones appended unused).
Poly embed(const Poly& p, std::size_t new_dim);

/// Reinterprets p in dimension new_dim < p.dim(); the dropped trailing
/// variables must not occur.
Poly truncate_dim(const Poly& p, std::size_t new_dim);

}  // namespace sphalg
