#pragma once

// Reference computations that do not share code paths with the main
// algorithms. Used by the verification suites and the unit tests.

#include <optional>

#include "sphalg/harmonic.hpp"
#include "sphalg/zonal.hpp"

namespace sphalg::oracle {

/// Harmonic decomposition by one exact linear solve per homogeneous degree:
/// unknowns are the coefficients of every part, equations are
/// sum (X.X)^m h_m = p together with Laplacian h_m = 0. nullopt when the
/// system is inconsistent or the solution is not unique.
std::optional<HarmonicDecomposition> brute_force_decompose(const Poly& p);

/// [M_jk, M_lm] p read off the commutator table: 0 for disjoint or equal
/// index pairs, otherwise rewrite both generators by M_ab = -M_ba so the
/// shared index sits in the middle and use [M_ab, M_bc] = M_ac.
Poly table_rotation_commutator(std::size_t j, std::size_t k, std::size_t l, std::size_t m, const Poly& p);

/// sum over b_1 + ... + b_N = n of prod_j C(2 b_j, b_j), by enumeration.
BigInt central_binomial_sum(long N, long n);

/// (2^n / n!) (N + 2n - 2)(N + 2n - 4) ... N.
BigRational central_binomial_closed_form(long N, long n);

/// Basis (as polynomials) of the homogeneous degree-d polynomials in N
/// variables killed by every M_jk, from an exact nullspace computation.
std::vector<Poly> rotation_invariants(std::size_t N, long d);

/// Basis of the harmonic homogeneous degree-d polynomials p with
/// M_{2j-1,2j} p = i eps_j a_j p for every plane, by exact nullspace.
std::vector<Poly> joint_eigen_kernel(const EigenSignature& sig, long d);

}  // namespace sphalg::oracle
