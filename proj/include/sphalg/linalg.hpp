#pragma once

// Exact Gaussian elimination over Q(i) on sparse rows. Used to certify
// linear independence and to solve small systems exactly.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sphalg/poly.hpp"

namespace sphalg::linalg {

using SparseRow = std::map<std::size_t, GaussianRational>;
using Vector = std::vector<GaussianRational>;

/// Incremental row echelon form; each stored row has leading entry 1.
class Echelon {
 public:
  /// Reduces row against the stored pivots; keeps it and returns true when
  /// it is independent of the rows seen so far.
  bool insert(SparseRow row);
  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;  // leading column -> row
};

std::size_t rank(std::span<const SparseRow> rows);

struct Solution {
  bool consistent = false;
  bool unique = false;
  Vector x;  // one solution when consistent (free variables set to 0)
};

/// Solves rows * x = rhs for x with `cols` unknowns.
Solution solve(std::span<const SparseRow> rows, std::span<const GaussianRational> rhs, std::size_t cols);

/// Basis of { x : rows * x = 0 } with `cols` unknowns.
std::vector<Vector> nullspace(std::span<const SparseRow> rows, std::size_t cols);

/// Column index for monomials, assigned on first sight.
class MonomialIndex {
 public:
  std::size_t index(const Monomial& m);
  std::optional<std::size_t> find(const Monomial& m) const;
  std::size_t size() const noexcept { return map_.size(); }

 private:
  std::map<Monomial, std::size_t, GrlexDescending> map_;
};

/// Coefficient vector of p as a sparse row.
SparseRow to_row(const Poly& p, MonomialIndex& index);

}  // namespace sphalg::linalg
