#pragma once

// The normalized spherical mean lambda_0: the linear functional that kills
// the image of every rotation generator and equals 1 on each power of X.X.
// Three independent routes compute it (monomial rule, iterated Laplacian,
// pairings of linear forms). Also the action of orthogonal matrices and the
// mean-value test for harmonicity.

#include <span>
#include <vector>

#include "sphalg/poly.hpp"

namespace sphalg {

/// Square matrix over Q(i) with A^T A = I (plain transpose, no conjugation).
class OrthoMatrix {
 public:
  /// Throws PreconditionError unless rows form an N x N orthogonal matrix.
  static OrthoMatrix from_rows(std::vector<std::vector<GaussianRational>> rows);
  static OrthoMatrix identity(std::size_t n);

  std::size_t dim() const noexcept { return rows_.size(); }
  /// 0-based entry (r, c).
  const GaussianRational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const std::vector<std::vector<GaussianRational>>& rows() const noexcept { return rows_; }

  OrthoMatrix transpose() const;
  friend OrthoMatrix operator*(const OrthoMatrix& a, const OrthoMatrix& b);
  friend bool operator==(const OrthoMatrix&, const OrthoMatrix&) = default;

 private:
  explicit OrthoMatrix(std::vector<std::vector<GaussianRational>> rows) : rows_(std::move(rows)) {}
  std::vector<std::vector<GaussianRational>> rows_;
};

/// s_{2n,N} = 1 / (N (N+2) ... (N+2n-2)); 1 for n = 0.
BigRational s_coeff(long n, long N);

/// lambda_0 of a single monomial: 0 if an exponent is odd, otherwise
/// prod (a_j - 1)!! * s_{|a|,N}.
BigRational monomial_mean(const Monomial& m);

/// lambda_0 by the monomial rule. Requires dim >= 1.
GaussianRational spherical_mean(const Poly& p);

/// lambda_0 of homogeneous p of degree 2n from the constant Laplacian^n p:
/// Laplacian^n p / (n! 2^n (2n+N-2)(2n+N-4)...(N)). Odd degree gives 0.
GaussianRational spherical_mean_via_laplacian(const Poly& p);

/// lambda_0 of a product of 2n linear forms as a sum over perfect matchings,
/// N^n s_{2n,N} sum_pi prod_{a,b in pi} lambda_0(p_a p_b).
GaussianRational pairing_mean(std::span<const Poly> forms);

/// p(XA): X_k is replaced by sum_m X_m A_mk.
Poly rotate(const Poly& p, const OrthoMatrix& a);

/// lambda_0 applied in X to p(X + t), as a polynomial in t (returned in the
/// variables x1..xN).
Poly shifted_mean(const Poly& p);

/// True iff lambda_0(p(X + t)) = p(t).
bool check_mean_value_harmonic(const Poly& p);

/// Rational orthogonal matrices for tests: signed permutations, Pythagorean
/// plane rotations in every coordinate plane, and dense products of those.
/// At least 10 distinct matrices for N >= 2; the two of O_1 for N = 1.
std::vector<OrthoMatrix> orthogonal_matrix_library(std::size_t N);

}  // namespace sphalg
