#include "sphalg/zonal.hpp"

#include <stdexcept>

#include "sphalg/errors.hpp"
#include "sphalg/harmonic.hpp"
#include "sphalg/ops.hpp"

namespace sphalg {

UniPoly::UniPoly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational UniPoly::coeff(long k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

UniPoly UniPoly::derivative() const {
  std::vector<GaussianRational> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * GaussianRational(static_cast<long>(k)));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::shifted() const {
  if (is_zero()) return {};
  std::vector<GaussianRational> out(coeffs_.size() + 1);
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + 1);
  return UniPoly(std::move(out));
}

Poly UniPoly::evaluate(const Poly& y) const {
  Poly acc(y.dim());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * y;
    acc += Poly::constant(y.dim(), *it);
  }
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<GaussianRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return UniPoly(std::move(out));
}

UniPoly operator*(const GaussianRational& c, const UniPoly& a) {
  std::vector<GaussianRational> out = a.coeffs_;
  for (auto& v : out) v *= c;
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string() const {
  // Reuse the multivariate printer and rename the variable.
  Poly p(1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) p.add_term(Monomial{static_cast<Monomial::Exponent>(k)}, coeffs_[k]);
  std::string s = p.to_string();
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'x' && i + 1 < s.size() && s[i + 1] == '1') {
      out += 'Y';
      ++i;
    } else {
      out += s[i];
    }
  }
  return out;
}

UniPoly gegenbauer_solve(long n, long N, const GaussianRational& alpha) {
  if (n < 0) throw PreconditionError("gegenbauer_solve: n must be >= 0");
  if (N < 2) throw PreconditionError("gegenbauer_solve: N must be >= 2");
  std::vector<GaussianRational> q(static_cast<std::size_t>(n) + 1);
  q[n] = 1;
  for (long k = n - 2; k >= 0; k -= 2) {
    const GaussianRational ratio(make_rational((k + 2) * (k + 1), (k - n) * (k + n + N - 2)));
    q[k] = alpha * ratio * q[k + 2];
  }
  return UniPoly(std::move(q));
}

UniPoly gegenbauer_residual(const UniPoly& q, long n, long N, const GaussianRational& alpha) {
  const UniPoly d1 = q.derivative();
  const UniPoly d2 = d1.derivative();
  const UniPoly y2d2 = d2.shifted().shifted();
  return alpha * d2 + GaussianRational(-1) * y2d2 + GaussianRational(-(N - 1)) * d1.shifted() +
         GaussianRational(n * (n + N - 2)) * q;
}

ZonalHarmonic zonal_harmonic(std::span<const GaussianRational> t, const GaussianRational& c, long n) {
  const std::size_t N = t.size();
  if (N < 2) throw PreconditionError("zonal_harmonic: t must have at least 2 entries");
  bool nonzero = false;
  GaussianRational tt;
  Poly tx(N);
  for (std::size_t j = 0; j < N; ++j) {
    nonzero = nonzero || !t[j].is_zero();
    tt += t[j] * t[j];
    Monomial x(N);
    x[j] = 1;
    tx.add_term(x, t[j]);
  }
  if (!nonzero) throw PreconditionError("zonal_harmonic: t must not be zero");
  ZonalHarmonic out;
  out.q = gegenbauer_solve(n, static_cast<long>(N), tt * c);
  out.h = project_lc(out.q.evaluate(tx), c);
  return out;
}

EigenSignature::EigenSignature(std::size_t N, std::vector<unsigned> a, std::vector<int> eps)
    : dim_(N), a_(std::move(a)), eps_(std::move(eps)) {
  if (N < 1) throw PreconditionError("eigen signature: N must be >= 1");
  if (a_.size() != N / 2 || eps_.size() != N / 2) {
    throw PreconditionError("eigen signature: expected " + std::to_string(N / 2) + " exponents and signs for N=" +
                            std::to_string(N));
  }
  for (std::size_t j = 0; j < a_.size(); ++j) {
    if (eps_[j] != 1 && eps_[j] != -1) throw PreconditionError("eigen signature: signs must be +1 or -1");
    if (a_[j] == 0) eps_[j] = 1;
  }
}

long EigenSignature::total() const noexcept {
  long s = 0;
  for (unsigned v : a_) s += v;
  return s;
}

Poly eigen_monomial(const EigenSignature& sig) {
  const std::size_t N = sig.dim();
  Poly y = Poly::constant(N, 1);
  for (std::size_t j = 0; j < sig.planes(); ++j) {
    if (sig.a()[j] == 0) continue;
    const Poly factor = Poly::variable(N, 2 * j + 1) +
                        GaussianRational(0, sig.eps()[j]) * Poly::variable(N, 2 * j + 2);
    y = y * pow(factor, sig.a()[j]);
  }
  return y;
}

Poly l_operator(const Poly& q, std::span<const unsigned> a) {
  if (a.size() != q.dim()) throw PreconditionError("l_operator: one exponent per variable is required");
  Poly out(q.dim());
  for (std::size_t j = 1; j <= q.dim(); ++j) {
    const Poly d1 = partial(q, j);
    if (d1.is_zero()) continue;
    out += Poly::variable(q.dim(), j) * partial(d1, j);
    out += GaussianRational(static_cast<long>(a[j - 1]) + 1) * d1;
  }
  return out;
}

Poly l_kernel_lift(std::span<const unsigned> a, long d, const Poly& qd) {
  const std::size_t n = a.size();
  if (n < 1) throw PreconditionError("l_kernel_lift: at least one exponent is required");
  if (d < 0) throw PreconditionError("l_kernel_lift: d must be >= 0");
  if (qd.dim() != n - 1) {
    throw PreconditionError("l_kernel_lift: q_d must have dimension " + std::to_string(n - 1));
  }
  if (n == 1 && d >= 1) throw PreconditionError("l_kernel_lift: the kernel is zero for n = 1 and d >= 1");
  if (!qd.is_zero() && homogeneous_degree(qd) != Degree::finite(d)) {
    throw PreconditionError("l_kernel_lift: q_d must be homogeneous of degree " + std::to_string(d));
  }
  const std::span<const unsigned> lower = a.first(n - 1);
  const long an = static_cast<long>(a[n - 1]);
  Poly out = embed(qd, n);
  Poly cur = qd;
  for (long k = 1; k <= d && !cur.is_zero(); ++k) {
    cur = l_operator(cur, lower);
    cur *= GaussianRational(make_rational(-1, k * (k + an)));
    Monomial tn(n);
    tn[n - 1] = static_cast<Monomial::Exponent>(k);
    out += embed(cur, n) * Poly::term(tn, 1);
  }
  return out;
}

namespace {

// T_j -> X_{2j-1}^2 + X_{2j}^2 in dimension N.
std::vector<Poly> block_norms(std::size_t planes, std::size_t N) {
  std::vector<Poly> out;
  for (std::size_t j = 0; j < planes; ++j) {
    const Poly a = Poly::variable(N, 2 * j + 1);
    const Poly b = Poly::variable(N, 2 * j + 2);
    out.push_back(a * a + b * b);
  }
  return out;
}

}  // namespace

Poly common_eigen_harmonic(const EigenSignature& sig, const Poly& q) {
  const std::size_t N = sig.dim();
  if (N % 2 != 0) throw PreconditionError("common_eigen_harmonic: N must be even");
  const std::size_t n = N / 2;
  if (q.dim() != n) throw PreconditionError("common_eigen_harmonic: q must have " + std::to_string(n) + " variables");
  const Poly lq = l_operator(q, sig.a());
  if (!lq.is_zero()) throw PreconditionError("common_eigen_harmonic: q is not in the kernel of L");
  const std::vector<Poly> norms = block_norms(n, N);
  const Poly y = eigen_monomial(sig);
  const Poly p = y * substitute_linear(q, norms);
  if (!(laplacian(p) == GaussianRational(4) * (y * substitute_linear(lq, norms)))) {
    throw std::logic_error("common_eigen_harmonic: Laplacian factorization failed");
  }
  return p;
}

Poly odd_dim_eigen_harmonic(const EigenSignature& sig, long d, const Poly& seed) {
  const std::size_t N = sig.dim();
  if (N % 2 != 1 || N < 3) throw PreconditionError("odd_dim_eigen_harmonic: N must be odd and >= 3");
  const std::size_t n = N / 2;
  if (seed.dim() != n) {
    throw PreconditionError("odd_dim_eigen_harmonic: seed must have " + std::to_string(n) + " variables");
  }
  const long e = d - sig.total();
  if (e < 0) throw PreconditionError("odd_dim_eigen_harmonic: d must be >= |a|");
  const long parity = e % 2;
  if (!seed.is_zero() && homogeneous_degree(seed) != Degree::finite((e - parity) / 2)) {
    throw PreconditionError("odd_dim_eigen_harmonic: seed must be homogeneous of degree " +
                            std::to_string((e - parity) / 2) + " (d - |a| = " + std::to_string(e) + ")");
  }
  std::vector<Poly> images = block_norms(n, N);
  images.reserve(n);
  const Poly xn = Poly::variable(N, N);
  Poly q_of_x(N);
  Poly qk = seed;
  for (long k = parity; k <= e; k += 2) {
    q_of_x += substitute_linear(qk, images) * pow(xn, static_cast<unsigned>(k));
    if (k + 2 > e) break;
    qk = l_operator(qk, sig.a());
    qk *= GaussianRational(make_rational(-4, (k + 2) * (k + 1)));
  }
  return eigen_monomial(sig) * q_of_x;
}

}  // namespace sphalg
