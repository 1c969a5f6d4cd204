// Runs the twelve acceptance criteria, one PASS/FAIL line each.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "sphalg/verify.hpp"

namespace {

struct Criterion {
  const char* suite;
  const char* title;
};

constexpr Criterion kCriteria[] = {
    {"magic", "magic identity on 500 random polynomials, N 2..5, deg <= 10, under 30 s"},
    {"commutators", "commutator table for all index patterns, N <= 5"},
    {"dimension", "harmonic dimension formulas and exact basis rank, N 2..5, d 0..8"},
    {"worked-mean", "lambda_0(x1^4 x2^6) = 1/2^9 at N = 4 by three routes"},
    {"mean-oracles", "three lambda_0 routes agree on random homogeneous polynomials"},
    {"multinomial", "central binomial sum identity, N <= 6, n <= 6, spot value 2N^2+4N"},
    {"decomposition", "decomposition round trip, uniqueness, brute-force cross-check"},
    {"mean-value", "mean-value test equals harmonicity"},
    {"rotation", "lambda_0 and Laplacian invariant under the orthogonal library"},
    {"zonal", "Gegenbauer residual zero, alpha = 0 gives Y^n, zonal harmonic contract"},
    {"eigen", "eigenvalues of Y under M_{2j-1,2j}, harmonic, Casimir value, |a| <= 5"},
    {"lc", "L_c harmonic, congruent mod X.X - c, commutes with M_jk"},
};

}  // namespace

int main(int argc, char** argv) {
  sphalg::verify::Options opts;
  if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  int index = 0;
  for (const Criterion& c : kCriteria) {
    ++index;
    const sphalg::verify::Suite* suite = sphalg::verify::find_suite(c.suite);
    if (suite == nullptr) {
      std::printf("FAIL %2d %s: suite '%s' missing\n", index, c.title, c.suite);
      ++failed;
      continue;
    }
    const sphalg::verify::SuiteResult r = sphalg::verify::run_suite(*suite, opts);
    std::printf("%s %2d %s (%zu checks, %zu failures, %.2fs)\n", r.passed() ? "PASS" : "FAIL", index, c.title,
                r.checks, r.failures, r.seconds);
    for (const std::string& m : r.messages) std::printf("        %s\n", m.c_str());
    if (!r.passed()) ++failed;
  }
  std::printf("%d of %d criteria passed (seed %llu)\n", index - failed, index,
              static_cast<unsigned long long>(opts.seed));
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
