#include "sphalg/errors.hpp"
#include "support.hpp"

using namespace sphalg;
using namespace sphalg::test;

TEST_CASE("parsing") {
  CHECK(P("x1^2 - x2^2", 2).to_string() == "x1^2 - x2^2");
  CHECK(P("1/2*i*x1", 1) == Poly::term(Monomial{1}, Z(0, 1, 1, 2)));
  CHECK(P(" 3/2 * x1^2*x2 - x3 + 1/2*i*x2^4 ", 3).size() == 3);
  CHECK(P("-(x1 - 1)^2", 1) == P("-x1^2 + 2*x1 - 1", 1));
  CHECK(P("0", 2).is_zero());
  CHECK(P("x1*x1", 1) == P("x1^2", 1));
}

TEST_CASE("parse errors carry the offset") {
  try {
    P("x1^2*x2 + x3", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 10);
    CHECK(std::string(e.what()).find("out of range") != std::string::npos);
  }
  for (const char* bad : {"", "x", "x0", "x1^", "(x1", "x1 +", "2**x1", "x1^-1", "1/0*x1"}) {
    CHECK_THROWS(P(bad, 2));
  }
}

TEST_CASE("printing round trips") {
  Gen g(61);
  for (int t = 0; t < 100; ++t) {
    const std::size_t N = static_cast<std::size_t>(g.uniform(1, 5));
    const Poly p = g.poly(N, 5, 6);
    CHECK(P(p.to_string(), N) == p);
    CHECK(P(p.to_string(), N).to_string() == p.to_string());
  }
}

TEST_CASE("json forms") {
  const Poly p = P("3/2*x1^2*x2 - i*x2 + 7", 2);
  const nlohmann::json j = to_json(p);
  CHECK(j["dim"] == 2);
  CHECK(j["terms"].size() == 3);
  CHECK(poly_from_json(j) == p);
  const GaussianRational z = Z(-3, 4, 5, 7);
  CHECK(scalar_from_json(to_json(z)) == z);
  CHECK(to_json(Q(1, 2)) == nlohmann::json{{"re_num", "1"}, {"re_den", "2"}, {"im_num", "0"}, {"im_den", "1"}});
  // Big integers survive as decimal strings.
  const GaussianRational big(BigRational(BigInt("123456789012345678901234567890")));
  CHECK(scalar_from_json(to_json(big)) == big);
}
