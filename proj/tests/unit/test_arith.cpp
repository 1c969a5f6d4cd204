#include "sphalg/errors.hpp"
#include "support.hpp"

using namespace sphalg;
using namespace sphalg::test;

namespace {

BigInt product_of_odds(long b) {
  BigInt acc = 1;
  for (long k = b; k > 1; k -= 2) acc *= k;
  return acc;
}

}  // namespace

TEST_CASE("double factorial") {
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(7) == 105);
  for (long b = 1; b <= 25; ++b) CHECK(double_factorial(b) == product_of_odds(b));
  CHECK_THROWS_AS(double_factorial(-2), PreconditionError);
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(3, -1) == 0);
  for (long n = 1; n <= 20; ++n) {
    for (long k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

TEST_CASE("rationals are canonical") {
  CHECK(make_rational(6, -4) == make_rational(-3, 2));
  CHECK(make_rational(6, -4).get_den() == 2);
  CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);
}

TEST_CASE("gaussian rational basics") {
  const GaussianRational one_plus_i(1, 1);
  CHECK(one_plus_i * one_plus_i.conj() == 2);
  CHECK(Q(2, 3).inv() == Q(3, 2));
  const GaussianRational z = Z(3, 5, 4, 7);
  CHECK(z.conj().conj() == z);
  CHECK(GaussianRational::i() * GaussianRational::i() == -1);
  CHECK(z.norm() == make_rational(9, 25) + make_rational(16, 49));
  CHECK_THROWS_AS(GaussianRational(0).inv(), DivisionByZero);
  CHECK_THROWS_AS(Q(1) / GaussianRational(0), DivisionByZero);
}

TEST_CASE("scalar text round trip") {
  for (const char* s : {"0", "1", "-4", "3/2", "1/2*i", "-i", "i", "3/5+4/7*i", "-1/3-2*i"}) {
    CHECK(parse_scalar(s).to_string() == s);
  }
  CHECK(parse_scalar("6/4") == Q(3, 2));
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("2x"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
}

TEST_CASE("field axioms on random scalars") {
  Gen g(11);
  for (int t = 0; t < 400; ++t) {
    const GaussianRational a = g.scalar(), b = g.scalar(), c = g.scalar();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == 0);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a * b).norm() == a.norm() * b.norm());
    if (!a.is_zero()) {
      CHECK(a * a.inv() == 1);
      CHECK((b / a) * a == b);
    }
    CHECK(parse_scalar(a.to_string()) == a);
  }
}
