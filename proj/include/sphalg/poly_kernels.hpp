#pragma once

// Sparse product kernels. multiply_serial is the reference; the OpenMP
// kernel must agree with it exactly and is what operator* dispatches to for
// large operands.

#include <cstddef>

#include "sphalg/poly.hpp"

namespace sphalg::kernels {

Poly multiply_serial(const Poly& a, const Poly& b);

/// Splits the terms of the larger operand across threads; each thread
/// accumulates a private partial product, and the partials are summed.
Poly multiply_parallel(const Poly& a, const Poly& b);

/// Term-count product above which operator* uses multiply_parallel.
inline constexpr std::size_t kParallelThreshold = 1u << 14;

/// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads();

}  // namespace sphalg::kernels
