#include "sphalg/ops.hpp"

#include <string>

#include "sphalg/errors.hpp"

namespace sphalg {

namespace {

void require_index(const Poly& p, std::size_t j, const char* op) {
  if (j < 1 || j > p.dim()) {
    throw PreconditionError(std::string(op) + ": index " + std::to_string(j) + " out of range 1.." +
                            std::to_string(p.dim()));
  }
}

GaussianRational integer(long v) { return GaussianRational(v); }

// Exact quotient by X_var of the part of p divisible by X_var.
Poly drop_one_power(const Poly& p, std::size_t var) {
  PolyBuilder out(p.dim());
  for (const auto& [m, c] : p.terms()) {
    if (m[var - 1] == 0) continue;
    Monomial q = m;
    --q[var - 1];
    out.add(std::move(q), GaussianRational(c));
  }
  return std::move(out).build();
}

}  // namespace

Poly partial(const Poly& p, std::size_t j) {
  require_index(p, j, "partial");
  PolyBuilder out(p.dim());
  for (const auto& [m, c] : p.terms()) {
    const auto e = m[j - 1];
    if (e == 0) continue;
    Monomial d = m;
    --d[j - 1];
    out.add(std::move(d), c * integer(e));
  }
  return std::move(out).build();
}

Poly rotation_generator(const Poly& p, std::size_t j, std::size_t k) {
  require_index(p, j, "rotation_generator");
  require_index(p, k, "rotation_generator");
  if (j == k) throw PreconditionError("rotation_generator: j and k must differ");
  PolyBuilder out(p.dim());
  for (const auto& [m, c] : p.terms()) {
    if (const auto ek = m[k - 1]; ek > 0) {  // X_j d_k
      Monomial t = m;
      --t[k - 1];
      ++t[j - 1];
      out.add(std::move(t), c * integer(ek));
    }
    if (const auto ej = m[j - 1]; ej > 0) {  // -X_k d_j
      Monomial t = m;
      --t[j - 1];
      ++t[k - 1];
      out.add(std::move(t), c * integer(-static_cast<long>(ej)));
    }
  }
  return std::move(out).build();
}

Poly laplacian(const Poly& p) {
  PolyBuilder out(p.dim());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const auto e = m[j];
      if (e < 2) continue;
      Monomial d = m;
      d[j] -= 2;
      out.add(std::move(d), c * integer(static_cast<long>(e) * (e - 1)));
    }
  }
  return std::move(out).build();
}

Poly laplacian_power(const Poly& p, unsigned m) {
  Poly out = p;
  for (unsigned i = 0; i < m && !out.is_zero(); ++i) out = laplacian(out);
  return out;
}

Poly euler(const Poly& p) {
  PolyBuilder out(p.dim());
  for (const auto& [m, c] : p.terms()) out.add(m, c * integer(m.degree()));
  return std::move(out).build();
}

Poly casimir(const Poly& p) {
  Poly out(p.dim());
  for (std::size_t j = 1; j <= p.dim(); ++j) {
    for (std::size_t k = j + 1; k <= p.dim(); ++k) out += rotation_generator(rotation_generator(p, j, k), j, k);
  }
  return out;
}

Derivation::Derivation(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
  for (const Poly& a : coeffs_) {
    if (a.dim() != coeffs_.size()) {
      throw PreconditionError("Derivation: coefficient dimension " + std::to_string(a.dim()) +
                              " does not match the number of coefficients " + std::to_string(coeffs_.size()));
    }
  }
}

Derivation Derivation::zero(std::size_t dim) { return Derivation(std::vector<Poly>(dim, Poly(dim))); }

Derivation Derivation::rotation(std::size_t dim, std::size_t j, std::size_t k) {
  if (j == k || j < 1 || k < 1 || j > dim || k > dim) throw PreconditionError("Derivation::rotation: bad indices");
  Derivation l = zero(dim);
  l.coeffs_[k - 1] = Poly::variable(dim, j);
  l.coeffs_[j - 1] = -Poly::variable(dim, k);
  return l;
}

Derivation& Derivation::operator+=(const Derivation& o) {
  if (o.dim() != dim()) throw PreconditionError("Derivation: dimension mismatch");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

Derivation operator*(const Poly& f, const Derivation& l) {
  if (f.dim() != l.dim()) throw PreconditionError("Derivation: dimension mismatch");
  std::vector<Poly> c;
  c.reserve(l.dim());
  for (const Poly& a : l.coeffs()) c.push_back(f * a);
  return Derivation(std::move(c));
}

Poly apply_derivation(const Derivation& l, const Poly& p) {
  if (l.dim() != p.dim()) throw PreconditionError("apply_derivation: dimension mismatch");
  Poly out(p.dim());
  for (std::size_t j = 1; j <= p.dim(); ++j) {
    const Poly& a = l.coeff(j);
    if (a.is_zero()) continue;
    out += a * partial(p, j);
  }
  return out;
}

namespace {

// Coefficients a[0..n-1] involve only X_1..X_n and satisfy sum a_j X_j = 0.
void peel(std::vector<Poly> a, std::size_t n, RotationCombination& out) {
  if (n <= 1) return;  // a_1 X_1 = 0 forces a_1 = 0
  const std::size_t dim = a.front().dim();
  std::vector<Poly> lower;
  lower.reserve(n - 1);
  for (std::size_t j = 1; j < n; ++j) {
    Poly base = coefficient_in(a[j - 1], n, 0);
    Poly b = drop_one_power(a[j - 1] - base, n);
    lower.push_back(std::move(base));
    if (b.is_zero()) continue;
    // b_j (X_n d_j - X_j d_n) = -b_j M_jn
    auto [it, inserted] = out.try_emplace({j, n}, dim);
    it->second -= b;
  }
  peel(std::move(lower), n - 1, out);
}

}  // namespace

RotationCombination decompose_annihilating_derivation(const Derivation& l) {
  const std::size_t n = l.dim();
  if (n == 0) return {};
  if (!apply_derivation(l, x_dot_x(n)).is_zero()) {
    throw PreconditionError("decompose_annihilating_derivation: L(X.X) != 0");
  }
  RotationCombination out;
  peel(l.coeffs(), n, out);
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Derivation derivation_from_rotations(std::size_t dim, const RotationCombination& c) {
  Derivation l = Derivation::zero(dim);
  for (const auto& [jk, coeff] : c) l += coeff * Derivation::rotation(dim, jk.first, jk.second);
  return l;
}

Poly apply_operator(const OperatorTag& a, const Poly& p) {
  struct Visitor {
    const Poly& p;
    Poly operator()(const op::Rotation& r) const { return rotation_generator(p, r.j, r.k); }
    Poly operator()(const op::Casimir&) const { return casimir(p); }
    Poly operator()(const op::Laplacian&) const { return laplacian(p); }
    Poly operator()(const op::MultiplyXX&) const { return x_dot_x(p.dim()) * p; }
    Poly operator()(const op::Euler&) const { return euler(p); }
  };
  return std::visit(Visitor{p}, a);
}

Poly commutator(const OperatorTag& a, const OperatorTag& b, const Poly& p) {
  return apply_operator(a, apply_operator(b, p)) - apply_operator(b, apply_operator(a, p));
}

}  // namespace sphalg
