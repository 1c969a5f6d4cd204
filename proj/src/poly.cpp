#include "sphalg/poly.hpp"

#include <algorithm>
#include <numeric>

#include "sphalg/errors.hpp"
#include "sphalg/poly_kernels.hpp"

namespace sphalg {

long Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0L);
}

bool Monomial::all_even() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e % 2 == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t k = 0; k < out.exps_.size(); ++k) out.exps_[k] += b.exps_[k];
  return out;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const long da = a.degree();
  const long db = b.degree();
  if (da != db) return da > db;
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

Poly Poly::constant(std::size_t dim, const GaussianRational& c) {
  Poly p(dim);
  p.add_term(Monomial(dim), c);
  return p;
}

Poly Poly::variable(std::size_t dim, std::size_t j) {
  if (j < 1 || j > dim) {
    throw PreconditionError("variable index " + std::to_string(j) + " out of range 1.." + std::to_string(dim));
  }
  Monomial m(dim);
  m[j - 1] = 1;
  return term(m, 1);
}

Poly Poly::term(const Monomial& m, const GaussianRational& c) {
  Poly p(m.dim());
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Degree Poly::degree() const {
  // The first term in grlex-descending order has the top degree.
  if (terms_.empty()) return Degree::minus_infinity();
  return Degree::finite(terms_.begin()->first.degree());
}

GaussianRational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational Poly::constant_term() const { return coefficient(Monomial(dim_)); }

void Poly::add_term(const Monomial& m, const GaussianRational& c) {
  if (m.dim() != dim_) {
    throw PreconditionError("monomial of dimension " + std::to_string(m.dim()) + " added to polynomial of dimension " +
                            std::to_string(dim_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void PolyBuilder::add(Monomial&& m, GaussianRational&& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = poly_.terms_.try_emplace(std::move(m), std::move(c));
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) poly_.terms_.erase(it);
}

void require_same_dim(const Poly& a, const Poly& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw PreconditionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()) + ")");
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_dim(*this, o, "add");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_dim(*this, o, "sub");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_dim(a, b, "mul");
  if (a.size() * b.size() >= kernels::kParallelThreshold && kernels::max_threads() > 1) {
    return kernels::multiply_parallel(a, b);
  }
  return kernels::multiply_serial(a, b);
}

Poly pow(const Poly& p, unsigned e) {
  Poly result = Poly::constant(p.dim(), 1);
  Poly base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly x_dot_x(std::size_t dim) {
  if (dim < 1) throw PreconditionError("x_dot_x: dimension must be >= 1");
  Poly p(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Monomial m(dim);
    m[j] = 2;
    p.add_term(m, 1);
  }
  return p;
}

Poly homogeneous_component(const Poly& p, long d) {
  Poly out(p.dim());
  if (d < 0) return out;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() == d) out.add_term(m, c);
  }
  return out;
}

std::optional<Degree> homogeneous_degree(const Poly& p) {
  if (p.is_zero()) return Degree::minus_infinity();
  const long d = p.terms().begin()->first.degree();
  // Terms are sorted by degree, so the last one has the lowest.
  if (p.terms().rbegin()->first.degree() != d) return std::nullopt;
  return Degree::finite(d);
}

bool is_homogeneous(const Poly& p) { return homogeneous_degree(p).has_value(); }

namespace {

void require_var(const Poly& p, std::size_t var, const char* op) {
  if (var < 1 || var > p.dim()) {
    throw PreconditionError(std::string(op) + ": variable index " + std::to_string(var) + " out of range 1.." +
                            std::to_string(p.dim()));
  }
}

}  // namespace

long degree_in(const Poly& p, std::size_t var) {
  require_var(p, var, "degree_in");
  long d = -1;
  for (const auto& [m, c] : p.terms()) d = std::max<long>(d, m[var - 1]);
  return d;
}

Poly coefficient_in(const Poly& p, std::size_t var, unsigned k) {
  require_var(p, var, "coefficient_in");
  Poly out(p.dim());
  for (const auto& [m, c] : p.terms()) {
    if (m[var - 1] != k) continue;
    Monomial rest = m;
    rest[var - 1] = 0;
    out.add_term(rest, c);
  }
  return out;
}

DivMod divmod_monic(const Poly& p, const Poly& d, std::size_t var) {
  require_same_dim(p, d, "divmod_monic");
  require_var(p, var, "divmod_monic");
  const long k = degree_in(d, var);
  if (k < 0) throw PreconditionError("divmod_monic: divisor is zero");
  const Poly lead = coefficient_in(d, var, static_cast<unsigned>(k));
  if (!(lead == Poly::constant(d.dim(), 1))) {
    throw PreconditionError("divmod_monic: divisor is not monic in x" + std::to_string(var));
  }
  DivMod out{Poly(p.dim()), p};
  for (long m = degree_in(out.remainder, var); m >= k; m = degree_in(out.remainder, var)) {
    Poly step = coefficient_in(out.remainder, var, static_cast<unsigned>(m));
    Monomial shift_m(p.dim());
    shift_m[var - 1] = static_cast<Monomial::Exponent>(m - k);
    step = step * Poly::term(shift_m, 1);
    out.quotient += step;
    out.remainder -= step * d;
  }
  return out;
}

Poly substitute_linear(const Poly& p, std::span<const Poly> images) {
  if (images.size() != p.dim()) {
    throw PreconditionError("substitute: expected " + std::to_string(p.dim()) + " images, got " +
                            std::to_string(images.size()));
  }
  const std::size_t target_dim = images.empty() ? 0 : images.front().dim();
  for (const Poly& img : images) {
    if (img.dim() != target_dim) throw PreconditionError("substitute: images have mismatched dimensions");
  }
  // powers[j][e] = images[j]^e, filled on demand.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t j, unsigned e) -> const Poly& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(Poly::constant(target_dim, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[j]);
    return cache[e];
  };
  Poly out(target_dim);
  for (const auto& [m, c] : p.terms()) {
    Poly t = Poly::constant(target_dim, c);
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (m[j] != 0) t = t * power(j, m[j]);
    }
    out += t;
  }
  return out;
}

Poly shift(const Poly& p) {
  const std::size_t n = p.dim();
  PolyBuilder out(2 * n);
  std::vector<Monomial::Exponent> split(n, 0);  // X-exponent chosen per variable
  for (const auto& [m, c] : p.terms()) {
    // Odometer over 0 <= split[j] <= m[j]; (X_j + t_j)^e = sum C(e,a) X_j^a t_j^(e-a).
    std::fill(split.begin(), split.end(), 0);
    while (true) {
      Monomial out_m(2 * n);
      BigInt weight = 1;
      for (std::size_t j = 0; j < n; ++j) {
        out_m[j] = split[j];
        out_m[n + j] = m[j] - split[j];
        weight *= binomial(m[j], split[j]);
      }
      out.add(std::move(out_m), c * GaussianRational(BigRational(weight)));
      std::size_t j = 0;
      while (j < n && split[j] == m[j]) split[j++] = 0;
      if (j == n) break;
      ++split[j];
    }
  }
  return std::move(out).build();
}

std::vector<Monomial> monomials_of_degree(std::size_t dim, long d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (dim == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  // Lex-descending: the first exponent runs from d down to 0.
  Monomial m(dim);
  auto rec = [&](auto&& self, std::size_t j, long left) -> void {
    if (j + 1 == dim) {
      m[j] = static_cast<Monomial::Exponent>(left);
      out.push_back(m);
      return;
    }
    for (long e = left; e >= 0; --e) {
      m[j] = static_cast<Monomial::Exponent>(e);
      self(self, j + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

Poly embed(const Poly& p, std::size_t new_dim) {
  if (new_dim < p.dim()) throw PreconditionError("embed: target dimension is smaller than source");
  PolyBuilder out(new_dim);
  for (const auto& [m, c] : p.terms()) {
    Monomial e(new_dim);
    for (std::size_t j = 0; j < m.dim(); ++j) e[j] = m[j];
    out.add(std::move(e), GaussianRational(c));
  }
  return std::move(out).build();
}

Poly truncate_dim(const Poly& p, std::size_t new_dim) {
  if (new_dim > p.dim()) throw PreconditionError("truncate_dim: target dimension is larger than source");
  PolyBuilder out(new_dim);
  for (const auto& [m, c] : p.terms()) {
    Monomial e(new_dim);
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j < new_dim) {
        e[j] = m[j];
      } else if (m[j] != 0) {
        throw PreconditionError("truncate_dim: dropped variable x" + std::to_string(j + 1) + " occurs");
      }
    }
    out.add(std::move(e), GaussianRational(c));
  }
  return std::move(out).build();
}

}  // namespace sphalg
