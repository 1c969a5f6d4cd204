#pragma once

// Random polynomial generation and the sample-check driver shared by the
// verification suites.

#include <exception>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sphalg/poly.hpp"
#include "sphalg/verify.hpp"

namespace sphalg::verify {

/// Deterministic generator; each suite gets its own stream derived from the
/// seed and the suite name.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::string_view stream);

  long uniform(long lo, long hi);
  bool chance(int percent);

  /// num/den with |num| <= 9, 1 <= den <= 6.
  BigRational rational();
  BigRational nonzero_rational();
  /// A rational, with an imaginary part one time in four.
  GaussianRational scalar();
  GaussianRational nonzero_scalar();

  /// Uniformly random exponent split of total degree d.
  Monomial monomial(std::size_t dim, long d);
  /// 1..max_terms terms of degree <= max_deg (may cancel to fewer).
  Poly poly(std::size_t dim, long max_deg, long max_terms);
  /// Nonzero homogeneous polynomial of degree d.
  Poly homogeneous(std::size_t dim, long d, long max_terms);
  /// Nonzero linear form with up to `support` nonzero coefficients.
  Poly linear_form(std::size_t dim, long support);
  /// Harmonic homogeneous polynomial of degree d built from random boundary
  /// data; may be zero only when no nonzero harmonic exists.
  Poly harmonic(std::size_t dim, long d, long max_terms);

 private:
  std::mt19937_64 rng_;
};

/// Outcome of one sample: empty on success, otherwise a description.
using Verdict = std::optional<std::string>;

inline Verdict fail_if(bool bad, const std::string& what) {
  if (bad) return what;
  return std::nullopt;
}

/// Runs check on every sample (in parallel when requested) and records the
/// verdicts in sample order. Exceptions count as failures.
template <class Sample, class Check>
void check_samples(SuiteResult& r, const std::vector<Sample>& samples, const Options& opts, Check&& check) {
  const long n = static_cast<long>(samples.size());
  std::vector<Verdict> verdicts(samples.size());
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
  for (long i = 0; i < n; ++i) {
    try {
      verdicts[i] = check(samples[i]);
    } catch (const std::exception& e) {
      verdicts[i] = std::string("exception: ") + e.what();
    }
  }
  for (long i = 0; i < n; ++i) {
    r.expect(!verdicts[i].has_value(), "sample " + std::to_string(i) + ": " + verdicts[i].value_or(""));
  }
}

}  // namespace sphalg::verify
