#include "sphalg/mean.hpp"

#include "sphalg/errors.hpp"
#include "sphalg/ops.hpp"

namespace sphalg {

OrthoMatrix OrthoMatrix::from_rows(std::vector<std::vector<GaussianRational>> rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw PreconditionError("orthogonal matrix: empty");
  for (const auto& r : rows) {
    if (r.size() != n) throw PreconditionError("orthogonal matrix: expected " + std::to_string(n) + " columns per row");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      GaussianRational dot;
      for (std::size_t m = 0; m < n; ++m) dot += rows[m][i] * rows[m][j];
      if (dot != GaussianRational(i == j ? 1 : 0)) {
        throw PreconditionError("matrix is not orthogonal: (A^T A)_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                " = " + dot.to_string());
      }
    }
  }
  return OrthoMatrix(std::move(rows));
}

OrthoMatrix OrthoMatrix::identity(std::size_t n) {
  std::vector<std::vector<GaussianRational>> rows(n, std::vector<GaussianRational>(n));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return OrthoMatrix(std::move(rows));
}

OrthoMatrix OrthoMatrix::transpose() const {
  const std::size_t n = dim();
  std::vector<std::vector<GaussianRational>> t(n, std::vector<GaussianRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[j][i] = rows_[i][j];
  }
  return OrthoMatrix(std::move(t));
}

OrthoMatrix operator*(const OrthoMatrix& a, const OrthoMatrix& b) {
  if (a.dim() != b.dim()) throw PreconditionError("matrix product: dimension mismatch");
  const std::size_t n = a.dim();
  std::vector<std::vector<GaussianRational>> out(n, std::vector<GaussianRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) out[i][j] += a.rows_[i][m] * b.rows_[m][j];
    }
  }
  return OrthoMatrix(std::move(out));
}

BigRational s_coeff(long n, long N) {
  if (n < 0) throw PreconditionError("s_coeff: n must be >= 0");
  if (N < 1) throw PreconditionError("s_coeff: N must be >= 1");
  BigInt den = 1;
  for (long i = 0; i < n; ++i) den *= N + 2 * i;
  return make_rational(1, den);
}

BigRational monomial_mean(const Monomial& m) {
  if (!m.all_even()) return 0;
  if (m.dim() == 0) return 1;
  BigInt num = 1;
  for (auto e : m.exponents()) num *= double_factorial(static_cast<long>(e) - 1);
  return BigRational(num) * s_coeff(m.degree() / 2, static_cast<long>(m.dim()));
}

GaussianRational spherical_mean(const Poly& p) {
  if (p.dim() < 1) throw PreconditionError("spherical_mean: dimension must be >= 1");
  GaussianRational acc;
  for (const auto& [m, c] : p.terms()) {
    BigRational v = monomial_mean(m);
    if (sgn(v) != 0) acc += c * GaussianRational(std::move(v));
  }
  return acc;
}

GaussianRational spherical_mean_via_laplacian(const Poly& p) {
  if (p.dim() < 1) throw PreconditionError("spherical_mean_via_laplacian: dimension must be >= 1");
  const auto deg = homogeneous_degree(p);
  if (!deg) throw PreconditionError("spherical_mean_via_laplacian: input must be homogeneous");
  if (!deg->is_finite() || deg->value() % 2 != 0) return 0;
  const long n = deg->value() / 2;
  const long N = static_cast<long>(p.dim());
  const Poly top = laplacian_power(p, static_cast<unsigned>(n));
  BigInt den = factorial(n);
  den <<= n;
  for (long i = 1; i <= n; ++i) den *= 2 * n + N - 2 * i;
  return top.constant_term() * GaussianRational(make_rational(1, den));
}

namespace {

// Sum over perfect matchings of the still-unused indices.
GaussianRational matching_sum(const std::vector<std::vector<GaussianRational>>& gram, std::vector<bool>& used) {
  std::size_t first = 0;
  while (first < used.size() && used[first]) ++first;
  if (first == used.size()) return 1;
  used[first] = true;
  GaussianRational acc;
  for (std::size_t b = first + 1; b < used.size(); ++b) {
    if (used[b] || gram[first][b].is_zero()) continue;
    used[b] = true;
    acc += gram[first][b] * matching_sum(gram, used);
    used[b] = false;
  }
  used[first] = false;
  return acc;
}

}  // namespace

GaussianRational pairing_mean(std::span<const Poly> forms) {
  if (forms.size() % 2 != 0) throw PreconditionError("pairing_mean: expected an even number of forms");
  if (forms.empty()) return 1;
  const std::size_t N = forms.front().dim();
  if (N < 1) throw PreconditionError("pairing_mean: dimension must be >= 1");
  // Coefficient vectors of the linear forms.
  std::vector<std::vector<GaussianRational>> coeffs;
  for (const Poly& f : forms) {
    if (f.dim() != N) throw PreconditionError("pairing_mean: dimension mismatch");
    std::vector<GaussianRational> v(N);
    for (const auto& [m, c] : f.terms()) {
      if (m.degree() != 1) throw PreconditionError("pairing_mean: every form must be linear homogeneous");
      for (std::size_t j = 0; j < N; ++j) {
        if (m[j] == 1) v[j] = c;
      }
    }
    coeffs.push_back(std::move(v));
  }
  // lambda_0 of a product of two linear forms is (a.b)/N.
  const std::size_t k = forms.size();
  const GaussianRational inv_n(make_rational(1, static_cast<long>(N)));
  std::vector<std::vector<GaussianRational>> gram(k, std::vector<GaussianRational>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      GaussianRational dot;
      for (std::size_t j = 0; j < N; ++j) dot += coeffs[a][j] * coeffs[b][j];
      gram[a][b] = dot * inv_n;
    }
  }
  std::vector<bool> used(k, false);
  const long n = static_cast<long>(k / 2);
  BigInt npow;
  mpz_ui_pow_ui(npow.get_mpz_t(), N, static_cast<unsigned long>(n));
  return GaussianRational(BigRational(npow) * s_coeff(n, static_cast<long>(N))) * matching_sum(gram, used);
}

Poly rotate(const Poly& p, const OrthoMatrix& a) {
  const std::size_t n = p.dim();
  if (a.dim() != n) throw PreconditionError("rotate: matrix dimension does not match the polynomial");
  std::vector<Poly> images;
  images.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Poly img(n);
    for (std::size_t m = 0; m < n; ++m) {
      Monomial x(n);
      x[m] = 1;
      img.add_term(x, a.at(m, k));
    }
    images.push_back(std::move(img));
  }
  return substitute_linear(p, images);
}

Poly shifted_mean(const Poly& p) {
  const std::size_t n = p.dim();
  if (n < 1) throw PreconditionError("shifted_mean: dimension must be >= 1");
  PolyBuilder out(n);
  const Poly shifted = shift(p);
  for (const auto& [m, c] : shifted.terms()) {
    Monomial x(n);
    Monomial t(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = m[j];
      t[j] = m[n + j];
    }
    BigRational v = monomial_mean(x);
    if (sgn(v) == 0) continue;
    out.add(std::move(t), c * GaussianRational(std::move(v)));
  }
  return std::move(out).build();
}

bool check_mean_value_harmonic(const Poly& p) { return shifted_mean(p) == p; }

namespace {

using Rows = std::vector<std::vector<GaussianRational>>;

Rows identity_rows(std::size_t n) {
  Rows r(n, std::vector<GaussianRational>(n));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

Rows plane_rotation(std::size_t n, std::size_t j, std::size_t k, long a, long b, long c) {
  Rows r = identity_rows(n);
  const GaussianRational cs(make_rational(a, c));
  const GaussianRational sn(make_rational(b, c));
  r[j][j] = cs;
  r[j][k] = sn;
  r[k][j] = -sn;
  r[k][k] = cs;
  return r;
}

}  // namespace

std::vector<OrthoMatrix> orthogonal_matrix_library(std::size_t N) {
  if (N < 1) throw PreconditionError("orthogonal_matrix_library: N must be >= 1");
  std::vector<OrthoMatrix> out;
  auto push = [&](const OrthoMatrix& m) {
    for (const OrthoMatrix& seen : out) {
      if (seen == m) return;
    }
    out.push_back(m);
  };
  const OrthoMatrix id = OrthoMatrix::identity(N);
  Rows neg = identity_rows(N);
  for (std::size_t i = 0; i < N; ++i) neg[i][i] = -1;
  push(id);
  push(OrthoMatrix::from_rows(neg));
  if (N == 1) return out;

  Rows flip = identity_rows(N);
  flip[0][0] = -1;
  const OrthoMatrix flip_m = OrthoMatrix::from_rows(flip);
  Rows swap = identity_rows(N);
  swap[0][0] = swap[1][1] = 0;
  swap[0][1] = swap[1][0] = 1;
  const OrthoMatrix swap_m = OrthoMatrix::from_rows(swap);
  push(flip_m);
  push(swap_m);
  if (N >= 3) {
    Rows cycle(N, std::vector<GaussianRational>(N));
    for (std::size_t i = 0; i < N; ++i) cycle[i][(i + 1) % N] = 1;
    push(OrthoMatrix::from_rows(cycle));
  }

  static constexpr long kTriples[3][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}};
  OrthoMatrix dense = id;
  std::size_t plane = 0;
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = j + 1; k < N; ++k, ++plane) {
      for (std::size_t t = 0; t < 3; ++t) {
        const auto& tr = kTriples[(plane + t) % 3];
        push(OrthoMatrix::from_rows(plane_rotation(N, j, k, tr[0], tr[1], tr[2])));
      }
      if (k == j + 1) {
        const auto& tr = kTriples[plane % 3];
        dense = dense * OrthoMatrix::from_rows(plane_rotation(N, j, k, tr[0], tr[1], tr[2]));
      }
    }
  }
  if (N == 2) dense = dense * OrthoMatrix::from_rows(plane_rotation(2, 0, 1, 5, 12, 13));
  push(dense);
  push(dense.transpose());
  push(dense * flip_m * swap_m);
  return out;
}

}  // namespace sphalg
