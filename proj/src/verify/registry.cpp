#include <array>
#include <chrono>

#include "suites.hpp"

namespace sphalg::verify {

namespace {

constexpr std::array kSuites{
    Suite{"magic", "(X.X) Laplacian = Euler^2 + (N-2) Euler + M.M on 500 random polynomials", checks::magic, true},
    Suite{"commutators", "commutator table of the M_jk and M.M for every index pattern", checks::commutators, true},
    Suite{"dimension", "harmonic basis size, both dimension formulas, exact rank", checks::dimension, true},
    Suite{"worked-mean", "lambda_0(x1^4 x2^6) = 1/512 at N=4 by three routes", checks::worked_mean, true},
    Suite{"mean-oracles", "monomial, Laplacian and pairing routes to lambda_0 agree", checks::mean_oracles, true},
    Suite{"multinomial", "central binomial sum identity by enumeration", checks::multinomial, true},
    Suite{"decomposition", "harmonic decomposition round trip, uniqueness, brute-force solve", checks::decomposition, true},
    Suite{"mean-value", "mean-value test agrees with harmonicity", checks::mean_value, true},
    Suite{"rotation", "lambda_0 and the Laplacian commute with rational orthogonal matrices", checks::rotation, true},
    Suite{"zonal", "Gegenbauer residual, parity, zonal harmonic contract", checks::zonal, true},
    Suite{"eigen", "eigenvalues of Y under M_{2j-1,2j}, harmonicity, Casimir eigenvalue", checks::eigen, true},
    Suite{"lc", "L_c is harmonic, congruent mod X.X - c, commutes with M_jk", checks::lc, true},
    Suite{"arith", "field axioms on Q(i), double factorial recursions", checks::arith_props, false},
    Suite{"poly", "ring axioms, degrees, division, substitution, text round trip", checks::poly_props, false},
    Suite{"operators", "product rules, commuting operators, derivation decomposition", checks::operator_props, false},
    Suite{"harmonic-props", "sphere ideal, rotation invariants, eigensplit", checks::harmonic_props, false},
    Suite{"mean-props", "lambda_0 identities and the s recursion", checks::mean_props, false},
    Suite{"zonal-props", "non-vanishing of q(t.X), joint eigenspaces, kernel lifts", checks::zonal_props, false},
};

}  // namespace

std::span<const Suite> suites() { return kSuites; }

const Suite* find_suite(std::string_view name) {
  for (const Suite& s : kSuites) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

SuiteResult run_suite(const Suite& s, const Options& opts) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r = s.run(opts);
  r.name = std::string(s.name);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace sphalg::verify
