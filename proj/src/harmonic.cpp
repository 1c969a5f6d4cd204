#include "sphalg/harmonic.hpp"

#include <map>

#include "sphalg/errors.hpp"
#include "sphalg/linalg.hpp"
#include "sphalg/ops.hpp"

namespace sphalg {

namespace {

// Powers (X.X)^j, extended on demand.
class XXPowers {
 public:
  explicit XXPowers(std::size_t dim) : xx_(x_dot_x(dim)) { powers_.push_back(Poly::constant(dim, 1)); }
  const Poly& operator[](std::size_t j) {
    while (powers_.size() <= j) powers_.push_back(powers_.back() * xx_);
    return powers_[j];
  }

 private:
  Poly xx_;
  std::vector<Poly> powers_;
};

// Laplacian((X.X)^m h) = c * (X.X)^{m-1} h for h harmonic of degree e.
BigInt lowering_constant(long m, long e, long N) { return BigInt(2 * m) * BigInt(2 * m + N - 2 + 2 * e); }

// Laplacian^k((X.X)^m h) = C * (X.X)^{m-k} h; returns C.
BigInt iterated_constant(long m, long k, long e, long N) {
  BigInt acc = 1;
  for (long i = 0; i < k; ++i) acc *= lowering_constant(m - i, e, N);
  return acc;
}

GaussianRational as_scalar(const BigInt& v) { return GaussianRational(BigRational(v)); }

// Harmonic parts h_0..h_s of a homogeneous polynomial of degree d.
std::vector<Poly> decompose_homogeneous(const Poly& p, long d, XXPowers& xx) {
  const long N = static_cast<long>(p.dim());
  const long s = d / 2;
  std::vector<Poly> lap;  // lap[k] = Laplacian^k p
  lap.reserve(s + 1);
  lap.push_back(p);
  for (long k = 1; k <= s; ++k) lap.push_back(laplacian(lap.back()));

  std::vector<Poly> h(s + 1, Poly(p.dim()));
  for (long k = s; k >= 0; --k) {
    Poly acc = lap[k];
    for (long m = k + 1; m <= s; ++m) {
      if (h[m].is_zero()) continue;
      acc -= as_scalar(iterated_constant(m, k, d - 2 * m, N)) * (xx[m - k] * h[m]);
    }
    if (k > 0) acc *= as_scalar(iterated_constant(k, k, d - 2 * k, N)).inv();
    h[k] = std::move(acc);
  }
  return h;
}

void trim(std::vector<Poly>& parts, std::size_t dim) {
  while (parts.size() > 1 && parts.back().is_zero()) parts.pop_back();
  if (parts.empty()) parts.emplace_back(dim);
}

void require_homogeneous_or_zero(const Poly& p, long d, const char* what) {
  if (p.is_zero()) return;
  const auto deg = homogeneous_degree(p);
  if (!deg || *deg != Degree::finite(d)) {
    throw PreconditionError(std::string("harmonic_from_boundary: ") + what + " must be 0 or homogeneous of degree " +
                            std::to_string(d));
  }
}

}  // namespace

bool is_harmonic(const Poly& p) { return laplacian(p).is_zero(); }

Poly reconstruct(const HarmonicDecomposition& h) {
  XXPowers xx(h.dim);
  Poly out(h.dim);
  for (std::size_t j = 0; j < h.parts.size(); ++j) {
    if (!h.parts[j].is_zero()) out += xx[j] * h.parts[j];
  }
  return out;
}

HarmonicDecomposition harmonic_decompose(const Poly& p) {
  if (p.dim() < 1) throw PreconditionError("harmonic_decompose: dimension must be >= 1");
  std::map<long, Poly> by_degree;
  for (const auto& [m, c] : p.terms()) {
    auto [it, inserted] = by_degree.try_emplace(m.degree(), p.dim());
    it->second.add_term(m, c);
  }
  XXPowers xx(p.dim());
  HarmonicDecomposition out{p.dim(), {}};
  for (const auto& [d, component] : by_degree) {
    std::vector<Poly> h = decompose_homogeneous(component, d, xx);
    if (out.parts.size() < h.size()) out.parts.resize(h.size(), Poly(p.dim()));
    for (std::size_t j = 0; j < h.size(); ++j) out.parts[j] += h[j];
  }
  trim(out.parts, p.dim());
  return out;
}

Poly project_lc(const Poly& p, const GaussianRational& c) {
  const HarmonicDecomposition h = harmonic_decompose(p);
  Poly out(p.dim());
  GaussianRational power = 1;
  for (const Poly& part : h.parts) {
    if (!part.is_zero()) out += power * part;
    power *= c;
  }
  return out;
}

Poly harmonic_from_boundary(const Poly& p0, const Poly& p1, std::size_t N, long d) {
  if (N < 1) throw PreconditionError("harmonic_from_boundary: N must be >= 1");
  if (d < 0) throw PreconditionError("harmonic_from_boundary: d must be >= 0");
  if (p0.dim() != N - 1 || p1.dim() != N - 1) {
    throw PreconditionError("harmonic_from_boundary: boundary data must have dimension N-1 = " + std::to_string(N - 1));
  }
  require_homogeneous_or_zero(p0, d, "p0");
  require_homogeneous_or_zero(p1, d - 1, "p1");

  Poly out(N);
  // Accumulates sum_k (-1)^k Laplacian^k(seed) X_N^(2k+offset) / (2k+offset)!.
  auto accumulate = [&](Poly cur, long offset) {
    for (long k = 0; !cur.is_zero(); ++k) {
      const long e = 2 * k + offset;
      GaussianRational scale(make_rational(k % 2 == 0 ? 1 : -1, factorial(e)));
      Monomial xn(N);
      xn[N - 1] = static_cast<Monomial::Exponent>(e);
      out += scale * (embed(cur, N) * Poly::term(xn, 1));
      cur = laplacian(cur);
    }
  };
  accumulate(p0, 0);
  accumulate(p1, 1);
  return out;
}

std::vector<Poly> harmonic_basis(std::size_t N, long d) {
  if (N < 2) throw PreconditionError("harmonic_basis: N must be >= 2");
  if (d < 0) throw PreconditionError("harmonic_basis: d must be >= 0");
  const std::vector<Monomial> even = monomials_of_degree(N - 1, d);
  const std::vector<Monomial> odd = monomials_of_degree(N - 1, d - 1);
  const long total = static_cast<long>(even.size() + odd.size());
  std::vector<Poly> out(total);
  const Poly zero(N - 1);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < total; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (u < even.size()) {
      out[u] = harmonic_from_boundary(Poly::term(even[u], 1), zero, N, d);
    } else {
      out[u] = harmonic_from_boundary(zero, Poly::term(odd[u - even.size()], 1), N, d);
    }
  }
  return out;
}

BigInt harmonic_dimension(std::size_t N, long d) {
  const long n = static_cast<long>(N);
  return binomial(n + d - 2, n - 2) + binomial(n + d - 3, n - 2);
}

BigInt harmonic_dimension_by_difference(std::size_t N, long d) {
  const long n = static_cast<long>(N);
  return binomial(n + d - 1, n - 1) - binomial(n + d - 3, n - 1);
}

std::size_t polynomial_rank(const std::vector<Poly>& polys) {
  linalg::MonomialIndex index;
  linalg::Echelon echelon;
  for (const Poly& p : polys) echelon.insert(linalg::to_row(p, index));
  return echelon.rank();
}

std::vector<EigenComponent> eigensplit_xx_laplacian(const Poly& p) {
  const auto deg = homogeneous_degree(p);
  if (!deg) throw PreconditionError("eigensplit_xx_laplacian: input must be homogeneous");
  std::vector<EigenComponent> out;
  if (!deg->is_finite()) return out;
  const long d = deg->value();
  const long N = static_cast<long>(p.dim());
  const HarmonicDecomposition h = harmonic_decompose(p);
  XXPowers xx(p.dim());
  for (std::size_t m = 0; m < h.parts.size(); ++m) {
    if (h.parts[m].is_zero()) continue;
    const long lm = static_cast<long>(m);
    out.push_back({lm, BigInt(2 * lm) * BigInt(N - 2 + 2 * d - 2 * lm), xx[m] * h.parts[m]});
  }
  return out;
}

}  // namespace sphalg
