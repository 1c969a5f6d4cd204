#include "sphalg/poly_kernels.hpp"

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sphalg::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Poly multiply_serial(const Poly& a, const Poly& b) {
  require_same_dim(a, b, "mul");
  PolyBuilder out(a.dim());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add(ma * mb, ca * cb);
  }
  return std::move(out).build();
}

Poly multiply_parallel(const Poly& a, const Poly& b) {
  require_same_dim(a, b, "mul");
  const Poly& outer = a.size() >= b.size() ? a : b;
  const Poly& inner = a.size() >= b.size() ? b : a;

  // Random access into the outer operand's terms for static scheduling.
  std::vector<const Poly::Terms::value_type*> rows;
  rows.reserve(outer.size());
  for (const auto& t : outer.terms()) rows.push_back(&t);

  const int threads = max_threads();
  std::vector<Poly> partial(static_cast<std::size_t>(threads), Poly(a.dim()));
  const long n = static_cast<long>(rows.size());

#pragma omp parallel num_threads(threads)
  {
#ifdef _OPENMP
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
#else
    const std::size_t tid = 0;
#endif
    PolyBuilder local(a.dim());
#pragma omp for schedule(static)
    for (long r = 0; r < n; ++r) {
      const auto& [mo, co] = *rows[static_cast<std::size_t>(r)];
      for (const auto& [mi, ci] : inner.terms()) local.add(mo * mi, co * ci);
    }
    partial[tid] = std::move(local).build();
  }

  Poly out(a.dim());
  for (const Poly& p : partial) out += p;
  return out;
}

}  // namespace sphalg::kernels
