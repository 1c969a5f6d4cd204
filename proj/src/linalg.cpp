#include "sphalg/linalg.hpp"

#include "sphalg/errors.hpp"

namespace sphalg::linalg {

namespace {

// row -= factor * pivot
void axpy(SparseRow& row, const GaussianRational& factor, const SparseRow& pivot) {
  for (const auto& [col, v] : pivot) {
    auto [it, inserted] = row.try_emplace(col);
    it->second -= factor * v;
    if (it->second.is_zero()) row.erase(it);
  }
}

void scale_to_unit_lead(SparseRow& row) {
  const GaussianRational inv = row.begin()->second.inv();
  for (auto& [col, v] : row) v *= inv;
}

// Reduced row echelon form; returns pivot column -> row.
std::map<std::size_t, SparseRow> rref(std::span<const SparseRow> rows) {
  std::map<std::size_t, SparseRow> pivots;
  for (SparseRow row : rows) {
    for (auto it = row.begin(); it != row.end();) {
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      const GaussianRational f = it->second;
      const std::size_t col = it->first;
      axpy(row, f, p->second);
      it = row.upper_bound(col);
    }
    if (row.empty()) continue;
    scale_to_unit_lead(row);
    const std::size_t lead = row.begin()->first;
    // Clear the new pivot column from the rows already stored.
    for (auto& [c, other] : pivots) {
      auto hit = other.find(lead);
      if (hit != other.end()) {
        const GaussianRational f = hit->second;
        axpy(other, f, row);
      }
    }
    pivots.emplace(lead, std::move(row));
  }
  return pivots;
}

}  // namespace

bool Echelon::insert(SparseRow row) {
  while (!row.empty()) {
    auto lead = row.begin();
    auto p = pivots_.find(lead->first);
    if (p == pivots_.end()) {
      scale_to_unit_lead(row);
      const std::size_t col = row.begin()->first;
      pivots_.emplace(col, std::move(row));
      return true;
    }
    const GaussianRational f = lead->second;
    axpy(row, f, p->second);
  }
  return false;
}

std::size_t rank(std::span<const SparseRow> rows) {
  Echelon e;
  for (const SparseRow& r : rows) e.insert(r);
  return e.rank();
}

Solution solve(std::span<const SparseRow> rows, std::span<const GaussianRational> rhs, std::size_t cols) {
  if (rhs.size() != rows.size()) throw PreconditionError("solve: rhs length does not match the row count");
  // Augment with the right-hand side in column `cols`.
  std::vector<SparseRow> aug(rows.begin(), rows.end());
  for (std::size_t r = 0; r < aug.size(); ++r) {
    if (!aug[r].empty() && aug[r].rbegin()->first >= cols) throw PreconditionError("solve: column index out of range");
    if (!rhs[r].is_zero()) aug[r][cols] = rhs[r];
  }
  const auto pivots = rref(aug);
  Solution out;
  if (pivots.contains(cols)) return out;
  out.consistent = true;
  out.unique = pivots.size() == cols;
  out.x.assign(cols, GaussianRational());
  for (const auto& [col, row] : pivots) {
    auto it = row.find(cols);
    if (it != row.end()) out.x[col] = it->second;
  }
  return out;
}

std::vector<Vector> nullspace(std::span<const SparseRow> rows, std::size_t cols) {
  const auto pivots = rref(rows);
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivots.contains(free)) continue;
    Vector v(cols);
    v[free] = 1;
    for (const auto& [col, row] : pivots) {
      auto it = row.find(free);
      if (it != row.end()) v[col] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t MonomialIndex::index(const Monomial& m) {
  auto [it, inserted] = map_.try_emplace(m, map_.size());
  return it->second;
}

std::optional<std::size_t> MonomialIndex::find(const Monomial& m) const {
  auto it = map_.find(m);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

SparseRow to_row(const Poly& p, MonomialIndex& index) {
  SparseRow row;
  for (const auto& [m, c] : p.terms()) row.emplace(index.index(m), c);
  return row;
}

}  // namespace sphalg::linalg
