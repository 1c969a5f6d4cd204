#pragma once

// Differential operators on Q(i)[X_1..X_N]: partials, the rotation
// generators M_jk = X_j d_k - X_k d_j, the Laplacian, the Euler operator
// sum X_j d_j, the quadratic Casimir sum_{j<k} M_jk^2, and general
// first-order derivations. Indices are 1-based throughout.

#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "sphalg/poly.hpp"

namespace sphalg {

Poly partial(const Poly& p, std::size_t j);

/// X_j d_k p - X_k d_j p. Requires j != k.
Poly rotation_generator(const Poly& p, std::size_t j, std::size_t k);

Poly laplacian(const Poly& p);
/// Laplacian applied m times.
Poly laplacian_power(const Poly& p, unsigned m);

/// sum_j X_j d_j p; multiplies a homogeneous polynomial by its degree.
Poly euler(const Poly& p);

/// sum over unordered pairs {j, k} of M_jk(M_jk(p)).
Poly casimir(const Poly& p);

/// L = sum_j a_j d_j, determined by the values a_j = L(X_j).
class Derivation {
 public:
  explicit Derivation(std::vector<Poly> coeffs);

  /// The zero derivation on dimension dim.
  static Derivation zero(std::size_t dim);
  /// M_jk as a derivation: coefficient X_j at d_k and -X_k at d_j.
  static Derivation rotation(std::size_t dim, std::size_t j, std::size_t k);

  std::size_t dim() const noexcept { return coeffs_.size(); }
  const std::vector<Poly>& coeffs() const noexcept { return coeffs_; }
  /// a_j for 1-based j.
  const Poly& coeff(std::size_t j) const { return coeffs_.at(j - 1); }

  Derivation& operator+=(const Derivation& o);
  /// Left multiplication by a polynomial, f*L = sum (f a_j) d_j.
  friend Derivation operator*(const Poly& f, const Derivation& l);
  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  std::vector<Poly> coeffs_;
};

Poly apply_derivation(const Derivation& l, const Poly& p);

/// Coefficients c_jk (j < k) with L = sum c_jk M_jk, keyed by (j, k).
using RotationCombination = std::map<std::pair<std::size_t, std::size_t>, Poly>;

/// Writes a derivation that annihilates X.X as a polynomial combination of
/// the M_jk by peeling off the highest variable recursively. Throws
/// PreconditionError if L(X.X) != 0.
RotationCombination decompose_annihilating_derivation(const Derivation& l);

/// sum c_jk M_jk as a derivation on dimension dim.
Derivation derivation_from_rotations(std::size_t dim, const RotationCombination& c);

/// Operators that can appear in a commutator.
namespace op {
struct Rotation {
  std::size_t j;
  std::size_t k;
};
struct Casimir {};
struct Laplacian {};
struct MultiplyXX {};
struct Euler {};
}  // namespace op

using OperatorTag = std::variant<op::Rotation, op::Casimir, op::Laplacian, op::MultiplyXX, op::Euler>;

Poly apply_operator(const OperatorTag& a, const Poly& p);

/// (AB - BA)(p).
Poly commutator(const OperatorTag& a, const OperatorTag& b, const Poly& p);

}  // namespace sphalg
