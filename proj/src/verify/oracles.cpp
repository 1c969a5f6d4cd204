#include "sphalg/oracles.hpp"

#include <functional>
#include <map>

#include "sphalg/errors.hpp"
#include "sphalg/linalg.hpp"
#include "sphalg/ops.hpp"

namespace sphalg::oracle {

namespace {

using linalg::SparseRow;

// Accumulates equation rows addressed by (block, monomial).
class RowTable {
 public:
  SparseRow& row(std::size_t block, const Monomial& m) {
    auto [it, inserted] = index_.try_emplace({block, m}, rows_.size());
    if (inserted) rows_.emplace_back();
    return rows_[it->second];
  }
  std::optional<std::size_t> find(std::size_t block, const Monomial& m) const {
    auto it = index_.find({block, m});
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  void add(std::size_t block, const Poly& image, std::size_t col) {
    for (const auto& [m, c] : image.terms()) {
      SparseRow& r = row(block, m);
      auto [it, inserted] = r.try_emplace(col, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  }
  std::vector<SparseRow>& rows() { return rows_; }

 private:
  struct Key {
    std::size_t block;
    Monomial m;
  };
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (a.block != b.block) return a.block < b.block;
      return GrlexDescending{}(a.m, b.m);
    }
  };
  std::map<Key, std::size_t, KeyLess> index_;
  std::vector<SparseRow> rows_;
};

using LinearOp = std::function<Poly(const Poly&)>;

// Joint kernel of the operators on span(basis).
std::vector<Poly> kernel_on(const std::vector<Monomial>& basis, std::size_t dim, const std::vector<LinearOp>& ops) {
  RowTable table;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const Poly v = Poly::term(basis[col], 1);
    for (std::size_t k = 0; k < ops.size(); ++k) table.add(k, ops[k](v), col);
  }
  std::vector<Poly> out;
  for (const linalg::Vector& x : linalg::nullspace(table.rows(), basis.size())) {
    Poly p(dim);
    for (std::size_t col = 0; col < basis.size(); ++col) p.add_term(basis[col], x[col]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::optional<HarmonicDecomposition> brute_force_decompose(const Poly& p) {
  const std::size_t N = p.dim();
  if (N < 1) throw PreconditionError("brute_force_decompose: dimension must be >= 1");
  const Poly xx = x_dot_x(N);
  std::map<long, Poly> by_degree;
  for (const auto& [m, c] : p.terms()) {
    auto [it, inserted] = by_degree.try_emplace(m.degree(), N);
    it->second.add_term(m, c);
  }
  std::vector<Poly> parts(1, Poly(N));
  for (const auto& [d, component] : by_degree) {
    const long s = d / 2;
    // Unknown columns: (m, monomial of degree d - 2m).
    std::vector<std::pair<long, Monomial>> cols;
    for (long m = 0; m <= s; ++m) {
      for (Monomial& mono : monomials_of_degree(N, d - 2 * m)) cols.emplace_back(m, std::move(mono));
    }
    RowTable table;
    // Block 0: the reconstruction equations; block m + 1: harmonicity of part m.
    for (const Monomial& mono : monomials_of_degree(N, d)) table.row(0, mono);
    for (std::size_t col = 0; col < cols.size(); ++col) {
      const auto& [m, mono] = cols[col];
      const Poly v = Poly::term(mono, 1);
      table.add(0, pow(xx, static_cast<unsigned>(m)) * v, col);
      table.add(static_cast<std::size_t>(m) + 1, laplacian(v), col);
    }
    std::vector<GaussianRational> rhs(table.rows().size());
    for (const auto& [mono, c] : component.terms()) rhs[*table.find(0, mono)] = c;
    const linalg::Solution sol = linalg::solve(table.rows(), rhs, cols.size());
    if (!sol.consistent || !sol.unique) return std::nullopt;
    if (parts.size() < static_cast<std::size_t>(s) + 1) parts.resize(s + 1, Poly(N));
    for (std::size_t col = 0; col < cols.size(); ++col) parts[cols[col].first].add_term(cols[col].second, sol.x[col]);
  }
  while (parts.size() > 1 && parts.back().is_zero()) parts.pop_back();
  return HarmonicDecomposition{N, std::move(parts)};
}

Poly table_rotation_commutator(std::size_t j, std::size_t k, std::size_t l, std::size_t m, const Poly& p) {
  if (j == k || l == m) throw PreconditionError("table_rotation_commutator: indices of a generator must differ");
  const bool same = (j == l && k == m) || (j == m && k == l);
  std::size_t shared = 0;
  for (std::size_t a : {j, k}) {
    if (a == l || a == m) shared = a;
  }
  if (same || shared == 0) return Poly(p.dim());
  // M_jk = sign1 M_{a shared}, M_lm = sign2 M_{shared c}.
  const std::size_t a = (j == shared) ? k : j;
  const long sign1 = (k == shared) ? 1 : -1;
  const std::size_t c = (l == shared) ? m : l;
  const long sign2 = (l == shared) ? 1 : -1;
  return GaussianRational(sign1 * sign2) * rotation_generator(p, a, c);
}

BigInt central_binomial_sum(long N, long n) {
  if (N < 1 || n < 0) throw PreconditionError("central_binomial_sum: need N >= 1 and n >= 0");
  BigInt total = 0;
  std::vector<long> b(static_cast<std::size_t>(N), 0);
  // Enumerates compositions of n into N parts via the last part as slack.
  std::function<void(std::size_t, long, BigInt)> rec = [&](std::size_t j, long left, BigInt acc) {
    if (j + 1 == b.size()) {
      total += acc * binomial(2 * left, left);
      return;
    }
    for (long v = 0; v <= left; ++v) rec(j + 1, left - v, acc * binomial(2 * v, v));
  };
  rec(0, n, 1);
  return total;
}

BigRational central_binomial_closed_form(long N, long n) {
  BigInt num = 1;
  num <<= n;
  for (long i = 1; i <= n; ++i) num *= N + 2 * n - 2 * i;
  return make_rational(num, factorial(n));
}

std::vector<Poly> rotation_invariants(std::size_t N, long d) {
  std::vector<LinearOp> ops;
  for (std::size_t j = 1; j <= N; ++j) {
    for (std::size_t k = j + 1; k <= N; ++k) ops.push_back([j, k](const Poly& v) { return rotation_generator(v, j, k); });
  }
  return kernel_on(monomials_of_degree(N, d), N, ops);
}

std::vector<Poly> joint_eigen_kernel(const EigenSignature& sig, long d) {
  std::vector<LinearOp> ops;
  ops.push_back([](const Poly& v) { return laplacian(v); });
  for (std::size_t j = 0; j < sig.planes(); ++j) {
    const GaussianRational lambda(0, static_cast<long>(sig.eps()[j]) * static_cast<long>(sig.a()[j]));
    ops.push_back([j, lambda](const Poly& v) { return rotation_generator(v, 2 * j + 1, 2 * j + 2) - lambda * v; });
  }
  return kernel_on(monomials_of_degree(sig.dim(), d), sig.dim(), ops);
}

}  // namespace sphalg::oracle
