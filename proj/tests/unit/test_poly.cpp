#include "sphalg/errors.hpp"
#include "sphalg/poly_kernels.hpp"
#include "support.hpp"

using namespace sphalg;
using namespace sphalg::test;

TEST_CASE("degree and canonical order") {
  CHECK(Poly(2).degree() == Degree::minus_infinity());
  CHECK(Poly::constant(2, 0).is_zero());
  CHECK(P("x1^2*x2 + x2^4 + 1", 2).degree() == Degree::finite(4));
  CHECK(P("x2 + x1^2 + x1*x2", 2).to_string() == "x1^2 + x1*x2 + x2");
  CHECK(Poly::variable(3, 2) == P("x2", 3));
  CHECK(P("x1 - x1", 2).is_zero());
  CHECK(P("x1", 2) != P("x1", 3));
}

TEST_CASE("ring arithmetic examples") {
  CHECK(P("(x1+x2)*(x1-x2)", 2) == P("x1^2 - x2^2", 2));
  const Poly p = P("3*x1 - 1/2*i*x2^2", 2);
  CHECK(p + Poly(2) == p);
  // Expanded term by term by hand.
  CHECK(x_dot_x(2) * x_dot_x(2) == P("x1^4 + 2*x1^2*x2^2 + x2^4", 2));
  CHECK(pow(x_dot_x(2), 2) == x_dot_x(2) * x_dot_x(2));
  CHECK(pow(p, 0) == Poly::constant(2, 1));
  CHECK_THROWS_AS(P("x1", 2) + P("x1", 3), PreconditionError);
}

TEST_CASE("x dot x") {
  CHECK(x_dot_x(1) == P("x1^2", 1));
  CHECK(x_dot_x(2) == P("x1^2 + x2^2", 2));
  CHECK(x_dot_x(3) == P("x1^2 + x2^2 + x3^2", 3));
}

TEST_CASE("homogeneous components") {
  const Poly p = P("x1^2 + x2", 2);
  CHECK(homogeneous_component(p, 2) == P("x1^2", 2));
  CHECK(homogeneous_component(p, 0).is_zero());
  CHECK(homogeneous_component(p, -3).is_zero());
  const Poly q = (x_dot_x(2) - Poly::constant(2, 5)) * P("x1", 2);
  CHECK(homogeneous_component(q, 3) == P("x1^3 + x1*x2^2", 2));
  CHECK(homogeneous_component(q, 1) == P("-5*x1", 2));

  CHECK(is_homogeneous(P("x1*x2 + x2^2", 2)));
  CHECK(homogeneous_degree(P("x1*x2 + x2^2", 2)) == Degree::finite(2));
  CHECK_FALSE(is_homogeneous(P("x1 + 1", 2)));
  CHECK(is_homogeneous(Poly(2)));
  CHECK(homogeneous_degree(Poly(2)) == Degree::minus_infinity());
}

TEST_CASE("division by a monic polynomial") {
  const std::size_t N = 3;
  const Poly sphere = x_dot_x(N) - Poly::constant(N, Z(2, 1, 1, 3));
  DivMod r = divmod_monic(sphere, sphere, N);
  CHECK(r.quotient == Poly::constant(N, 1));
  CHECK(r.remainder.is_zero());

  const Poly p = P("x1^3", 2);
  const Poly d = x_dot_x(2) - Poly::constant(2, 1);
  r = divmod_monic(p, d, 1);
  CHECK(d * r.quotient + r.remainder == p);
  CHECK(degree_in(r.remainder, 1) < 2);
  CHECK(r.quotient == P("x1", 2));
  CHECK(r.remainder == P("x1 - x1*x2^2", 2));

  CHECK(divmod_monic(Poly(2), d, 2).remainder.is_zero());
  CHECK_THROWS_AS(divmod_monic(p, P("2*x1^2", 2), 1), PreconditionError);
}

TEST_CASE("division identity on random input") {
  Gen g(5);
  for (int t = 0; t < 150; ++t) {
    const std::size_t N = static_cast<std::size_t>(g.uniform(1, 4));
    const Poly p = g.poly(N, 6, 6);
    const Poly d = x_dot_x(N) - Poly::constant(N, g.scalar());
    const std::size_t var = static_cast<std::size_t>(g.uniform(1, static_cast<long>(N)));
    const DivMod r = divmod_monic(p, d, var);
    CHECK(d * r.quotient + r.remainder == p);
    CHECK(degree_in(r.remainder, var) < 2);
  }
}

TEST_CASE("linear substitution") {
  const std::vector<Poly> images{P("x1 + x2", 2), P("x2", 2)};
  CHECK(substitute_linear(P("x1^2", 2), images) == P("x1^2 + 2*x1*x2 + x2^2", 2));
  const Poly p = P("3*x1*x2^2 - i*x2 + 7", 2);
  const std::vector<Poly> id{P("x1", 2), P("x2", 2)};
  CHECK(substitute_linear(p, id) == p);
  // Rows of a rational rotation; orthogonality makes X.X invariant.
  const std::vector<Poly> rot{P("3/5*x1 + 4/5*x2", 2), P("-4/5*x1 + 3/5*x2", 2)};
  CHECK(substitute_linear(x_dot_x(2), rot) == x_dot_x(2));
}

TEST_CASE("shift by t") {
  CHECK(shift(P("x1", 1)) == P("x1 + x2", 2));
  CHECK(shift(P("x1^2", 1)) == P("x1^2 + 2*x1*x2 + x2^2", 2));
  CHECK(shift(P("x1*x2", 2)) == P("x1*x2 + x1*x4 + x2*x3 + x3*x4", 4));
}

TEST_CASE("monomials of a given degree") {
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(4, 5).size() == 56);
  CHECK(monomials_of_degree(2, -1).empty());
  CHECK(monomials_of_degree(0, 0).size() == 1);
  CHECK(monomials_of_degree(0, 3).empty());
  const auto ms = monomials_of_degree(2, 2);
  CHECK(ms.front() == Monomial{2, 0});
  CHECK(ms.back() == Monomial{0, 2});
}

TEST_CASE("embed and truncate") {
  const Poly p = P("x1*x2 - 2", 2);
  CHECK(embed(p, 4) == P("x1*x2 - 2", 4));
  CHECK(truncate_dim(embed(p, 4), 2) == p);
  CHECK_THROWS_AS(truncate_dim(p, 1), PreconditionError);
}

TEST_CASE("coefficient in one variable") {
  const Poly p = P("x1^2*x2 + 3*x1^2 - x2^3", 2);
  CHECK(degree_in(p, 1) == 2);
  CHECK(degree_in(Poly(2), 1) == -1);
  CHECK(coefficient_in(p, 1, 2) == P("x2 + 3", 2));
  CHECK(coefficient_in(p, 1, 0) == P("-x2^3", 2));
}

TEST_CASE("ring laws on random polynomials") {
  Gen g(8);
  for (int t = 0; t < 120; ++t) {
    const std::size_t N = static_cast<std::size_t>(g.uniform(1, 4));
    const Poly a = g.poly(N, 4, 5), b = g.poly(N, 4, 5), c = g.poly(N, 3, 4);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Poly(N));
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    CHECK(parse_poly(a.to_string(), N) == a);
    CHECK(poly_from_json(to_json(a)) == a);
  }
}

TEST_CASE("parallel product matches the serial reference") {
  Gen g(21);
  for (int t = 0; t < 6; ++t) {
    const std::size_t N = static_cast<std::size_t>(g.uniform(2, 5));
    const Poly a = g.poly(N, 12, 200), b = g.poly(N, 12, 200);
    CHECK(kernels::multiply_parallel(a, b) == kernels::multiply_serial(a, b));
    CHECK(a * b == kernels::multiply_serial(a, b));
  }
  CHECK(kernels::multiply_parallel(Poly(2), P("x1", 2)).is_zero());
}
