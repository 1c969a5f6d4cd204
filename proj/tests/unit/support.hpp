#pragma once

#include <cstdint>
#include <random>

#include "doctest.h"
#include "sphalg/arith.hpp"
#include "sphalg/poly.hpp"
#include "sphalg/text.hpp"

namespace sphalg::test {

inline Poly P(std::string_view text, std::size_t dim) { return parse_poly(text, dim); }

inline GaussianRational Q(long num, long den = 1) { return GaussianRational(make_rational(num, den)); }

inline GaussianRational Z(long re_num, long re_den, long im_num, long im_den) {
  return {make_rational(re_num, re_den), make_rational(im_num, im_den)};
}

// Small random scalars and sparse polynomials for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  BigRational rational() { return make_rational(uniform(-7, 7), uniform(1, 5)); }

  GaussianRational scalar() {
    if (uniform(0, 3) == 0) return {rational(), rational()};
    return rational();
  }

  GaussianRational nonzero_scalar() {
    GaussianRational z;
    while (z.is_zero()) z = scalar();
    return z;
  }

  Monomial monomial(std::size_t dim, long d) {
    Monomial m(dim);
    for (long k = 0; k < d; ++k) ++m[static_cast<std::size_t>(uniform(0, static_cast<long>(dim) - 1))];
    return m;
  }

  Poly poly(std::size_t dim, long max_deg, long max_terms) {
    Poly p(dim);
    const long terms = uniform(0, max_terms);
    for (long t = 0; t < terms; ++t) p.add_term(monomial(dim, uniform(0, max_deg)), nonzero_scalar());
    return p;
  }

  Poly homogeneous(std::size_t dim, long d, long max_terms) {
    Poly p(dim);
    while (p.is_zero()) {
      const long terms = uniform(1, max_terms);
      for (long t = 0; t < terms; ++t) p.add_term(monomial(dim, d), nonzero_scalar());
    }
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace sphalg::test
