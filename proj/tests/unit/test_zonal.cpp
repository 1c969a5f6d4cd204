#include "sphalg/errors.hpp"
#include "sphalg/harmonic.hpp"
#include "sphalg/ops.hpp"
#include "sphalg/oracles.hpp"
#include "sphalg/zonal.hpp"
#include "support.hpp"

using namespace sphalg;
using namespace sphalg::test;

namespace {

UniPoly Y(std::vector<GaussianRational> c) { return UniPoly(std::move(c)); }

// Written out independently of the library's residual.
UniPoly ode_lhs(const UniPoly& q, long n, long N, const GaussianRational& alpha) {
  const UniPoly d1 = q.derivative();
  const UniPoly d2 = d1.derivative();
  return alpha * d2 + GaussianRational(-1) * d2.shifted().shifted() + GaussianRational(1 - N) * d1.shifted() +
         GaussianRational(n * (n + N - 2)) * q;
}

}  // namespace

TEST_CASE("univariate polynomials") {
  CHECK(Y({1, 0, 0}) == Y({1}));
  CHECK(Y({0, 0}).is_zero());
  CHECK(Y({}).degree() == -1);
  CHECK(Y({Q(-1, 3), 0, 1}).to_string() == "Y^2 - 1/3");
  CHECK(Y({1, 2, 3}).derivative() == Y({2, 6}));
  CHECK(Y({1, 2}).shifted() == Y({0, 1, 2}));
  CHECK(Y({1, 0, 1}).evaluate(P("x1 + x2", 2)) == P("x1^2 + 2*x1*x2 + x2^2 + 1", 2));
}

TEST_CASE("gegenbauer recursion") {
  for (long N = 2; N <= 6; ++N) {
    CHECK(gegenbauer_solve(0, N, 5) == Y({1}));
    for (long n = 0; n <= 7; ++n) {
      std::vector<GaussianRational> yn(static_cast<std::size_t>(n) + 1);
      yn.back() = 1;
      CHECK(gegenbauer_solve(n, N, 0) == Y(yn));
    }
  }
  CHECK(gegenbauer_solve(2, 3, 1) == Y({Q(-1, 3), 0, 1}));
  CHECK(ode_lhs(Y({Q(-1, 3), 0, 1}), 2, 3, 1).is_zero());

  Gen g(51);
  for (int t = 0; t < 60; ++t) {
    const long N = g.uniform(2, 7), n = g.uniform(0, 9);
    const GaussianRational alpha = g.scalar();
    const UniPoly q = gegenbauer_solve(n, N, alpha);
    CHECK(q.degree() == n);
    CHECK(q.coeff(n) == 1);
    CHECK(ode_lhs(q, n, N, alpha).is_zero());
    CHECK(gegenbauer_residual(q, n, N, alpha) == ode_lhs(q, n, N, alpha));
  }
  CHECK_THROWS_AS(gegenbauer_solve(-1, 3, 1), PreconditionError);
  CHECK_THROWS_AS(gegenbauer_solve(2, 1, 1), PreconditionError);
}

TEST_CASE("zonal harmonics") {
  const std::vector<GaussianRational> e1{1, 0, 0};
  const ZonalHarmonic z = zonal_harmonic(e1, 1, 2);
  CHECK(z.q == Y({Q(-1, 3), 0, 1}));
  CHECK(z.h == P("2/3*x1^2 - 1/3*x2^2 - 1/3*x3^2", 3));

  const std::vector<GaussianRational> t{2, Z(0, 1, 1, 1), Q(1, 2)};
  CHECK(zonal_harmonic(t, 3, 0).q == Y({1}));
  CHECK(zonal_harmonic(t, 3, 0).h == Poly::constant(3, 1));
  CHECK(zonal_harmonic(t, 3, 1).q == Y({0, 1}));
  CHECK(zonal_harmonic(t, 3, 1).h == P("2*x1 + i*x2 + 1/2*x3", 3));

  Gen g(52);
  for (int k = 0; k < 30; ++k) {
    const std::size_t N = static_cast<std::size_t>(g.uniform(2, 5));
    std::vector<GaussianRational> dir(N);
    while (std::all_of(dir.begin(), dir.end(), [](const GaussianRational& v) { return v.is_zero(); })) {
      for (auto& v : dir) v = g.scalar();
    }
    const long n = g.uniform(0, 6);
    const ZonalHarmonic zh = zonal_harmonic(dir, g.scalar(), n);
    CHECK(is_harmonic(zh.h));
    CHECK((zh.h.is_zero() || homogeneous_degree(zh.h) == Degree::finite(n)));
  }
  CHECK_THROWS_AS(zonal_harmonic(std::vector<GaussianRational>{0, 0}, 1, 2), PreconditionError);
  CHECK_THROWS_AS(zonal_harmonic(std::vector<GaussianRational>{1}, 1, 2), PreconditionError);
}

TEST_CASE("eigen monomials") {
  const Poly y3 = eigen_monomial(EigenSignature(2, {3}, {1}));
  CHECK(y3 == P("(x1 + i*x2)^3", 2));
  CHECK(rotation_generator(y3, 1, 2) == GaussianRational(0, 3) * y3);
  CHECK(eigen_monomial(EigenSignature(5, {0, 0}, {1, -1})) == Poly::constant(5, 1));

  const Poly y11 = eigen_monomial(EigenSignature(4, {1, 1}, {1, -1}));
  CHECK(y11 == P("(x1 + i*x2)*(x3 - i*x4)", 4));
  CHECK(rotation_generator(y11, 1, 2) == GaussianRational::i() * y11);
  CHECK(rotation_generator(y11, 3, 4) == -1 * GaussianRational::i() * y11);

  CHECK_THROWS_AS(EigenSignature(4, {1}, {1}), PreconditionError);
  CHECK_THROWS_AS(EigenSignature(2, {1}, {2}), PreconditionError);
}

TEST_CASE("casimir eigenvalue of eigen monomials") {
  // Values confirmed by applying the Casimir directly, then frozen.
  CHECK(casimir(eigen_monomial(EigenSignature(2, {3}, {1}))) == -9 * eigen_monomial(EigenSignature(2, {3}, {1})));
  CHECK(casimir(eigen_monomial(EigenSignature(4, {1, 1}, {1, -1}))) ==
        -8 * eigen_monomial(EigenSignature(4, {1, 1}, {1, -1})));
  CHECK(casimir(eigen_monomial(EigenSignature(5, {2, 1}, {-1, 1}))) ==
        -18 * eigen_monomial(EigenSignature(5, {2, 1}, {-1, 1})));
  for (std::size_t N = 2; N <= 5; ++N) {
    for (unsigned a1 = 0; a1 <= 3; ++a1) {
      for (unsigned a2 = 0; a2 <= (N >= 4 ? 2u : 0u); ++a2) {
        std::vector<unsigned> a{a1};
        std::vector<int> eps{1};
        if (N >= 4) {
          a.push_back(a2);
          eps.push_back(-1);
        }
        const EigenSignature sig(N, a, eps);
        const long t = sig.total();
        const Poly y = eigen_monomial(sig);
        CHECK(casimir(y) == GaussianRational(-t * (t + static_cast<long>(N) - 2)) * y);
      }
    }
  }
}

TEST_CASE("kernel of L") {
  const std::vector<unsigned> a00{0, 0};
  CHECK(l_kernel_lift(a00, 0, Poly::constant(1, 1)) == Poly::constant(2, 1));
  const Poly q = l_kernel_lift(a00, 1, P("x1", 1));
  CHECK(q == P("x1 - x2", 2));
  CHECK(l_operator(q, a00).is_zero());
  CHECK(l_operator(P("x1", 2), a00) == Poly::constant(2, 1));

  const std::vector<unsigned> a1{2};
  CHECK(l_kernel_lift(a1, 0, Poly::constant(0, 1)) == Poly::constant(1, 1));
  CHECK_THROWS_AS(l_kernel_lift(a1, 1, Poly::constant(0, 1)), PreconditionError);

  Gen g(53);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.uniform(2, 3));
    std::vector<unsigned> a(n);
    for (auto& v : a) v = static_cast<unsigned>(g.uniform(0, 3));
    const long d = g.uniform(0, 4);
    const Poly qd = g.homogeneous(n - 1, d, 3);
    const Poly lifted = l_kernel_lift(a, d, qd);
    CHECK(l_operator(lifted, a).is_zero());
    CHECK(truncate_dim(coefficient_in(lifted, n, 0), n - 1) == qd);
  }
}

TEST_CASE("simultaneous eigenvectors in even dimension") {
  const EigenSignature zero(4, {0, 0}, {1, 1});
  const std::vector<unsigned> a00{0, 0};
  const Poly p = common_eigen_harmonic(zero, l_kernel_lift(a00, 1, P("x1", 1)));
  CHECK(p == P("x1^2 + x2^2 - x3^2 - x4^2", 4));
  CHECK(is_harmonic(p));
  CHECK(rotation_generator(p, 1, 2).is_zero());
  CHECK(rotation_generator(p, 3, 4).is_zero());

  const EigenSignature plane(2, {3}, {-1});
  CHECK(common_eigen_harmonic(plane, Poly::constant(1, 1)) == eigen_monomial(plane));
  CHECK_THROWS_AS(common_eigen_harmonic(plane, P("x1", 1)), PreconditionError);
  CHECK_THROWS_AS(common_eigen_harmonic(EigenSignature(3, {1}, {1}), Poly::constant(1, 1)), PreconditionError);

  Gen g(54);
  for (int t = 0; t < 20; ++t) {
    std::vector<unsigned> a{static_cast<unsigned>(g.uniform(0, 2)), static_cast<unsigned>(g.uniform(0, 2))};
    const EigenSignature sig(4, a, {g.uniform(0, 1) ? 1 : -1, g.uniform(0, 1) ? 1 : -1});
    const long d = g.uniform(0, 3);
    const Poly h = common_eigen_harmonic(sig, l_kernel_lift(sig.a(), d, g.homogeneous(1, d, 2)));
    CHECK(is_harmonic(h));
    for (std::size_t j = 0; j < 2; ++j) {
      const GaussianRational lambda(0, static_cast<long>(sig.eps()[j]) * static_cast<long>(sig.a()[j]));
      CHECK(rotation_generator(h, 2 * j + 1, 2 * j + 2) == lambda * h);
    }
  }
}

TEST_CASE("simultaneous eigenvectors in odd dimension") {
  const EigenSignature zero(3, {0}, {1});
  CHECK(odd_dim_eigen_harmonic(zero, 1, Poly::constant(1, 1)) == P("x3", 3));
  CHECK(odd_dim_eigen_harmonic(EigenSignature(3, {1}, {1}), 1, Poly::constant(1, 1)) == P("x1 + i*x2", 3));
  const Poly p = odd_dim_eigen_harmonic(zero, 2, P("x1", 1));
  CHECK(p == P("x1^2 + x2^2 - 2*x3^2", 3));
  CHECK(is_harmonic(p));

  // Dimension of the joint eigenspace matches the count from seeds.
  for (unsigned a = 0; a <= 2; ++a) {
    const EigenSignature sig(3, {a}, {1});
    for (long d = a; d <= static_cast<long>(a) + 4; ++d) {
      const Poly h = odd_dim_eigen_harmonic(sig, d, Poly::constant(1, 1) * pow(P("x1", 1), static_cast<unsigned>((d - a) / 2)));
      CHECK(is_harmonic(h));
      CHECK(homogeneous_degree(h) == Degree::finite(d));
      CHECK(oracle::joint_eigen_kernel(sig, d).size() == 1);
      CHECK(polynomial_rank({h, oracle::joint_eigen_kernel(sig, d).front()}) == 1);
    }
  }
}
