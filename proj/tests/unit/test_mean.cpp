#include "sphalg/errors.hpp"
#include "sphalg/harmonic.hpp"
#include "sphalg/mean.hpp"
#include "sphalg/ops.hpp"
#include "support.hpp"

using namespace sphalg;
using namespace sphalg::test;

namespace {

OrthoMatrix rational_rotation() {
  return OrthoMatrix::from_rows({{Q(3, 5), Q(4, 5)}, {Q(-4, 5), Q(3, 5)}});
}

}  // namespace

TEST_CASE("s coefficients") {
  for (long N = 1; N <= 6; ++N) CHECK(s_coeff(0, N) == 1);
  CHECK(s_coeff(5, 4) == make_rational(1, 12 * 10 * 8 * 6 * 4));
  CHECK(s_coeff(5, 4) == make_rational(1, 23040));
  CHECK(s_coeff(2, 4) == make_rational(1, 24));
}

TEST_CASE("monomial rule") {
  CHECK(spherical_mean(P("x1^4*x2^6", 4)) == Q(1, 512));
  for (std::size_t N = 1; N <= 6; ++N) {
    for (std::size_t j = 1; j <= N; ++j) CHECK(spherical_mean(pow(Poly::variable(N, j), 2)) == Q(1, static_cast<long>(N)));
  }
  CHECK(spherical_mean(P("x1*x2", 2)).is_zero());
  for (std::size_t N = 1; N <= 5; ++N) {
    for (unsigned n = 0; n <= 6; ++n) CHECK(spherical_mean(pow(x_dot_x(N), n)) == 1);
  }
  CHECK(spherical_mean(P("3 + i*x1", 2)) == 3);
  CHECK_THROWS_AS(spherical_mean(Poly(0)), PreconditionError);
}

TEST_CASE("laplacian route") {
  CHECK(spherical_mean_via_laplacian(P("x1^4*x2^6", 4)) == Q(1, 512));
  CHECK(spherical_mean_via_laplacian(P("x1^2", 3)) == Q(1, 3));
  CHECK(spherical_mean_via_laplacian(P("x1 - 2*x3", 3)).is_zero());
  CHECK_THROWS_AS(spherical_mean_via_laplacian(P("x1^2 + 1", 3)), PreconditionError);
}

TEST_CASE("pairing route") {
  const std::vector<Poly> same{P("x1", 2), P("x1", 2)};
  CHECK(pairing_mean(same) == Q(1, 2));
  const std::vector<Poly> cross{P("x1", 2), P("x2", 2)};
  CHECK(pairing_mean(cross).is_zero());
  const std::vector<Poly> four{P("x1", 2), P("x1", 2), P("x2", 2), P("x2", 2)};
  CHECK(pairing_mean(four) == Q(1, 8));
  CHECK(spherical_mean(P("x1^2*x2^2", 2)) == Q(1, 8));
}

TEST_CASE("three routes agree and the mean kills rotation images") {
  Gen g(41);
  for (int t = 0; t < 80; ++t) {
    const std::size_t N = static_cast<std::size_t>(g.uniform(2, 5));
    const long n = g.uniform(0, 3);
    std::vector<Poly> forms;
    Poly product = Poly::constant(N, 1);
    for (long k = 0; k < 2 * n; ++k) {
      Poly f(N);
      for (std::size_t j = 1; j <= N; ++j) {
        if (g.uniform(0, 1) == 1) f += g.scalar() * Poly::variable(N, j);
      }
      forms.push_back(f);
      product = product * f;
    }
    CHECK(pairing_mean(forms) == spherical_mean(product));
    CHECK(spherical_mean_via_laplacian(product) == spherical_mean(product));

    const Poly q = g.poly(N, 5, 4);
    CHECK(spherical_mean(rotation_generator(q, 1, N)).is_zero());
    CHECK(spherical_mean(x_dot_x(N) * q) == spherical_mean(q));
  }
}

TEST_CASE("orthogonal matrices") {
  const OrthoMatrix a = rational_rotation();
  CHECK(rotate(x_dot_x(2), a) == x_dot_x(2));
  const Poly p = P("x1^3 - 2*i*x1*x2 + 5", 2);
  CHECK(rotate(p, OrthoMatrix::identity(2)) == p);
  CHECK(rotate(P("x1", 2), a) == P("3/5*x1 - 4/5*x2", 2));
  CHECK(a * a.transpose() == OrthoMatrix::identity(2));
  CHECK_THROWS_AS(OrthoMatrix::from_rows({{Q(1), Q(1)}, {Q(0), Q(1)}}), PreconditionError);
  CHECK_THROWS_AS(OrthoMatrix::from_rows({{Q(1), Q(0)}}), PreconditionError);
  // A complex orthogonal matrix: rows (c, s), (-s, c) with c^2 + s^2 = 1.
  CHECK_NOTHROW(OrthoMatrix::from_rows({{Q(5, 4), Z(0, 1, 3, 4)}, {Z(0, 1, -3, 4), Q(5, 4)}}));

  for (std::size_t N = 1; N <= 5; ++N) {
    const auto lib = orthogonal_matrix_library(N);
    CHECK(lib.size() >= (N == 1 ? 2u : 10u));
    for (const OrthoMatrix& m : lib) CHECK(m.transpose() * m == OrthoMatrix::identity(N));
  }
}

TEST_CASE("rotation acts on the left and preserves the mean") {
  Gen g(42);
  for (std::size_t N = 2; N <= 4; ++N) {
    const auto lib = orthogonal_matrix_library(N);
    for (int t = 0; t < 10; ++t) {
      const Poly p = g.poly(N, 4, 4);
      const OrthoMatrix& a = lib[static_cast<std::size_t>(g.uniform(0, static_cast<long>(lib.size()) - 1))];
      const OrthoMatrix& b = lib[static_cast<std::size_t>(g.uniform(0, static_cast<long>(lib.size()) - 1))];
      CHECK(rotate(p, b * a) == rotate(rotate(p, a), b));
      CHECK(spherical_mean(rotate(p, a)) == spherical_mean(p));
      CHECK(laplacian(rotate(p, a)) == rotate(laplacian(p), a));
    }
  }
}

TEST_CASE("mean value property") {
  CHECK(shifted_mean(P("x1^2 - x2^2", 2)) == P("x1^2 - x2^2", 2));
  CHECK(shifted_mean(Poly::constant(2, 1)) == Poly::constant(2, 1));
  CHECK(shifted_mean(x_dot_x(2)) == x_dot_x(2) + Poly::constant(2, 1));
  for (const Poly& h : harmonic_basis(3, 3)) CHECK(check_mean_value_harmonic(h));
  CHECK_FALSE(check_mean_value_harmonic(x_dot_x(3)));
  CHECK_FALSE(check_mean_value_harmonic(P("x1^3", 2)));
}
