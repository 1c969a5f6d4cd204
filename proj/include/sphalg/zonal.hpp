#pragma once

// Zonal harmonics from a Gegenbauer-type recursion, and simultaneous
// eigenvectors of the commuting generators M_12, M_34, ..., M_{2n-1,2n}.

#include <span>
#include <string>
#include <vector>

#include "sphalg/poly.hpp"

namespace sphalg {

/// Polynomial in one variable Y; coeffs[k] multiplies Y^k. Trailing zeros
/// are stripped, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<GaussianRational> coeffs);

  const std::vector<GaussianRational>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  GaussianRational coeff(long k) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  UniPoly derivative() const;
  /// Multiplication by Y.
  UniPoly shifted() const;

  /// q(y) for a polynomial argument, by Horner's rule.
  Poly evaluate(const Poly& y) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const GaussianRational& c, const UniPoly& a);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Text in the variable Y, e.g. `Y^2 - 1/3`.
  std::string to_string() const;

 private:
  std::vector<GaussianRational> coeffs_;
};

/// Monic degree-n solution of (alpha - Y^2) q'' - (N-1) Y q' + n(n+N-2) q = 0,
/// by the downward recursion
///   q_k = alpha (k+2)(k+1) / ((k-n)(k+n+N-2)) q_{k+2}.
/// Requires n >= 0 and N >= 2.
UniPoly gegenbauer_solve(long n, long N, const GaussianRational& alpha);

/// Left-hand side of the equation above evaluated at q.
UniPoly gegenbauer_residual(const UniPoly& q, long n, long N, const GaussianRational& alpha);

struct ZonalHarmonic {
  UniPoly q;
  Poly h;
};

/// q = gegenbauer_solve(n, N, (t.t) c) and h = project_lc(q(t.X), c), where
/// N = t.size() >= 2 and t is not all zero.
ZonalHarmonic zonal_harmonic(std::span<const GaussianRational> t, const GaussianRational& c, long n);

/// Exponents a_1..a_n and signs eps_j for the n = floor(N/2) coordinate
/// planes (X_{2j-1}, X_{2j}). eps_j is forced to +1 where a_j = 0.
class EigenSignature {
 public:
  /// Throws PreconditionError unless a.size() == eps.size() == floor(N/2) and
  /// every sign is +1 or -1.
  EigenSignature(std::size_t N, std::vector<unsigned> a, std::vector<int> eps);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t planes() const noexcept { return a_.size(); }
  const std::vector<unsigned>& a() const noexcept { return a_; }
  const std::vector<int>& eps() const noexcept { return eps_; }
  /// |a| = sum a_j.
  long total() const noexcept;

 private:
  std::size_t dim_;
  std::vector<unsigned> a_;
  std::vector<int> eps_;
};

/// Y = prod_j (X_{2j-1} + i eps_j X_{2j})^{a_j}.
Poly eigen_monomial(const EigenSignature& sig);

/// L q = sum_j (T_j d_j^2 + (a_j + 1) d_j) q with one a_j per variable of q.
Poly l_operator(const Poly& q, std::span<const unsigned> a);

/// The element of ker L, homogeneous of degree d in T_1..T_n, whose part
/// free of T_n is qd:
///   q = sum_k q_{d-k} T_n^k,  q_{d-k} = (-1)^k L'^k qd / (k! (1+a_n)...(k+a_n)),
/// where L' acts on T_1..T_{n-1}. qd lives in n-1 variables (dimension 0 is
/// allowed for n = 1, where only d = 0 has a nonzero kernel).
Poly l_kernel_lift(std::span<const unsigned> a, long d, const Poly& qd);

/// Even N = 2n: p = Y * q(X_1^2+X_2^2, ..., X_{2n-1}^2+X_{2n}^2) for q in
/// ker L (n variables). Throws PreconditionError when L q != 0.
Poly common_eigen_harmonic(const EigenSignature& sig, const Poly& q);

/// Odd N = 2n+1: p = Y * sum_k q_k(block norms) X_N^k, homogeneous of degree d,
/// with (k+2)(k+1) q_{k+2} + 4 L q_k = 0 for k + 2 <= d - |a|. The seed is
/// q_0 when d - |a| is even and q_1 when it is odd, homogeneous of degree
/// floor((d - |a|) / 2) in n variables (or zero).
Poly odd_dim_eigen_harmonic(const EigenSignature& sig, long d, const Poly& seed);

}  // namespace sphalg
