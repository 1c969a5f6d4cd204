#pragma once

// Harmonic polynomials: the decomposition p = sum_j (X.X)^j p_j with each
// p_j harmonic, the projection L_c onto harmonics modulo X.X - c, bases of
// homogeneous harmonics from boundary data, and the eigenspaces of
// (X.X) * Laplacian.

#include <vector>

#include "sphalg/poly.hpp"

namespace sphalg {

/// p = parts[0] + (X.X) parts[1] + ... + (X.X)^s parts[s], each part
/// harmonic. Trailing zero parts are trimmed; parts is never empty.
struct HarmonicDecomposition {
  std::size_t dim = 0;
  std::vector<Poly> parts;

  friend bool operator==(const HarmonicDecomposition&, const HarmonicDecomposition&) = default;
};

bool is_harmonic(const Poly& p);

/// sum_j (X.X)^j parts[j].
Poly reconstruct(const HarmonicDecomposition& h);

/// Unique decomposition. Homogeneous components are handled separately by
/// a triangular solve on the iterated Laplacians. Requires dim >= 1.
HarmonicDecomposition harmonic_decompose(const Poly& p);

/// The harmonic polynomial congruent to p modulo X.X - c:
/// sum_j c^j parts[j].
Poly project_lc(const Poly& p, const GaussianRational& c);

/// Harmonic p of degree d in N variables with p = p0 + p1 X_N + O(X_N^2),
/// where p0 and p1 live in the first N-1 variables:
///   p_{2k}   = (-1)^k Laplacian^k p0 / (2k)!
///   p_{2k+1} = (-1)^k Laplacian^k p1 / (2k+1)!
/// p0 must be 0 or homogeneous of degree d, p1 0 or homogeneous of degree
/// d-1.
Poly harmonic_from_boundary(const Poly& p0, const Poly& p1, std::size_t N, long d);

/// Basis of the homogeneous harmonics of degree d in N >= 2 variables:
/// boundary data runs over the monomials of degree d (as p0), then those of
/// degree d-1 (as p1).
std::vector<Poly> harmonic_basis(std::size_t N, long d);

/// C(N+d-2, N-2) + C(N+d-3, N-2), the dimension of the degree-d harmonics.
BigInt harmonic_dimension(std::size_t N, long d);
/// The same dimension as C(N+d-1, N-1) - C(N+d-3, N-1).
BigInt harmonic_dimension_by_difference(std::size_t N, long d);

/// Exact rank of the coefficient matrix of the given polynomials.
std::size_t polynomial_rank(const std::vector<Poly>& polys);

struct EigenComponent {
  long m = 0;
  BigInt eigenvalue;  // 2m(N - 2 + 2d - 2m)
  Poly component;     // (X.X)^m times a harmonic of degree d - 2m
};

/// Splits homogeneous p into eigenvectors of (X.X) * Laplacian, skipping
/// zero components. Throws PreconditionError on non-homogeneous input.
std::vector<EigenComponent> eigensplit_xx_laplacian(const Poly& p);

}  // namespace sphalg
