#include "sampling.hpp"

#include "sphalg/harmonic.hpp"

namespace sphalg::verify {

namespace {

// FNV-1a, so streams do not depend on the standard library's hash.
std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

void SuiteResult::expect(bool ok, const std::string& msg) {
  ++checks;
  if (ok) return;
  ++failures;
  if (messages.size() < 8) messages.push_back(msg);
}

Sampler::Sampler(std::uint64_t seed, std::string_view stream) : rng_(seed ^ fnv1a(stream)) {}

long Sampler::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

bool Sampler::chance(int percent) { return uniform(1, 100) <= percent; }

BigRational Sampler::rational() { return make_rational(uniform(-9, 9), uniform(1, 6)); }

BigRational Sampler::nonzero_rational() {
  long num = 0;
  while (num == 0) num = uniform(-9, 9);
  return make_rational(num, uniform(1, 6));
}

GaussianRational Sampler::scalar() {
  if (chance(25)) return {rational(), nonzero_rational()};
  return rational();
}

GaussianRational Sampler::nonzero_scalar() {
  if (chance(25)) return {rational(), nonzero_rational()};
  return nonzero_rational();
}

Monomial Sampler::monomial(std::size_t dim, long d) {
  Monomial m(dim);
  if (dim == 0) return m;
  for (long i = 0; i < d; ++i) ++m[static_cast<std::size_t>(uniform(0, static_cast<long>(dim) - 1))];
  return m;
}

Poly Sampler::poly(std::size_t dim, long max_deg, long max_terms) {
  Poly p(dim);
  const long terms = uniform(1, max_terms);
  for (long t = 0; t < terms; ++t) p.add_term(monomial(dim, uniform(0, max_deg)), nonzero_scalar());
  return p;
}

Poly Sampler::homogeneous(std::size_t dim, long d, long max_terms) {
  Poly p(dim);
  while (p.is_zero()) {
    const long terms = uniform(1, max_terms);
    for (long t = 0; t < terms; ++t) p.add_term(monomial(dim, d), nonzero_scalar());
  }
  return p;
}

Poly Sampler::linear_form(std::size_t dim, long support) {
  Poly p(dim);
  while (p.is_zero()) {
    const long k = uniform(1, support);
    for (long t = 0; t < k; ++t) {
      Monomial m(dim);
      m[static_cast<std::size_t>(uniform(0, static_cast<long>(dim) - 1))] = 1;
      p.add_term(m, nonzero_scalar());
    }
  }
  return p;
}

Poly Sampler::harmonic(std::size_t dim, long d, long max_terms) {
  if (dim == 1) {
    if (d > 1) return Poly(1);
    Monomial m(1);
    m[0] = static_cast<Monomial::Exponent>(d);
    return Poly::term(m, nonzero_scalar());
  }
  const Poly p0 = homogeneous(dim - 1, d, max_terms);
  const Poly p1 = (d >= 1 && chance(50)) ? homogeneous(dim - 1, d - 1, max_terms) : Poly(dim - 1);
  return harmonic_from_boundary(p0, p1, dim, d);
}

}  // namespace sphalg::verify
