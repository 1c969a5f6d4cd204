#include "sampling.hpp"
#include "sphalg/harmonic.hpp"
#include "sphalg/mean.hpp"
#include "sphalg/ops.hpp"
#include "sphalg/oracles.hpp"
#include "sphalg/text.hpp"
#include "sphalg/zonal.hpp"
#include "suites.hpp"

namespace sphalg::verify::checks {

namespace {

Poly xx_minus(std::size_t N, const GaussianRational& c) { return x_dot_x(N) - Poly::constant(N, c); }

bool divisible_by_sphere(const Poly& p, const GaussianRational& c) {
  return divmod_monic(p, xx_minus(p.dim(), c), p.dim()).remainder.is_zero();
}

struct Pair {
  std::size_t j;
  std::size_t k;
};

std::vector<Pair> pairs(std::size_t N) {
  std::vector<Pair> out;
  for (std::size_t j = 1; j <= N; ++j) {
    for (std::size_t k = j + 1; k <= N; ++k) out.push_back({j, k});
  }
  return out;
}

}  // namespace

SuiteResult arith_props(const Options& o) {
  SuiteResult r;
  Sampler s(o.seed, "arith");
  struct Triple {
    GaussianRational a, b, c;
  };
  std::vector<Triple> samples;
  for (int i = 0; i < 300; ++i) samples.push_back({s.scalar(), s.scalar(), s.nonzero_scalar()});
  check_samples(r, samples, o, [](const Triple& t) -> Verdict {
    const auto& [a, b, c] = t;
    if ((a + b) + c != a + (b + c)) return "addition not associative";
    if ((a * b) * c != a * (b * c)) return "multiplication not associative";
    if (a * (b + c) != a * b + a * c) return "not distributive";
    if (a * b != b * a) return "multiplication not commutative";
    if (!(c * c.inv()).is_one()) return "inverse failed for " + c.to_string();
    if (a.conj().conj() != a) return "conjugation is not an involution";
    if (parse_scalar(a.to_string()) != a) return "text round trip failed for " + a.to_string();
    return std::nullopt;
  });
  r.expect(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1), "i^2 != -1");
  for (long n = 1; n <= 30; ++n) {
    r.expect(double_factorial(n) == n * double_factorial(n - 2), "n!! recursion fails at " + std::to_string(n));
  }
  for (long n = -1; n <= 30; ++n) {
    r.expect(BigRational(double_factorial(n)) == make_rational(double_factorial(n + 2), n + 2),
             "upward recursion fails at " + std::to_string(n));
  }
  return r;
}

SuiteResult poly_props(const Options& o) {
  SuiteResult r;
  Sampler s(o.seed, "poly");
  struct Sample {
    Poly p, q, w;
    GaussianRational c;
    std::vector<Poly> images;
  };
  std::vector<Sample> samples;
  for (long i = 0; i < 300; ++i) {
    const std::size_t N = 1 + i % 5;
    const std::size_t M = 1 + s.uniform(0, 3);
    std::vector<Poly> images;
    for (std::size_t j = 0; j < N; ++j) images.push_back(s.poly(M, 2, 3));
    samples.push_back({s.poly(N, 5, 5), s.poly(N, 5, 5), s.poly(N, 4, 4), s.scalar(), std::move(images)});
  }
  check_samples(r, samples, o, [](const Sample& t) -> Verdict {
    const auto& [p, q, w, c, images] = t;
    const std::size_t N = p.dim();
    if (!((p + q) + w == p + (q + w))) return "addition not associative";
    if (!((p * q) * w == p * (q * w))) return "multiplication not associative";
    if (!(p * (q + w) == p * q + p * w)) return "not distributive";
    if (!(p * q == q * p)) return "multiplication not commutative";
    if (!(p - p).is_zero()) return "p - p != 0";
    if ((p * q).degree() != p.degree() + q.degree()) return "degree is not additive";
    Poly sum(N);
    for (long d = 0; d <= 10; ++d) sum += homogeneous_component(p, d);
    if (!(sum == p)) return "homogeneous components do not sum to p";
    const DivMod dm = divmod_monic(p, xx_minus(N, c), N);
    if (!(xx_minus(N, c) * dm.quotient + dm.remainder == p)) return "division identity fails";
    if (degree_in(dm.remainder, N) >= 2) return "remainder degree too high";
    if (!(substitute_linear(p * q, images) == substitute_linear(p, images) * substitute_linear(q, images))) {
      return "substitution is not multiplicative";
    }
    if (!(parse_poly(p.to_string(), N) == p)) return "text round trip failed for " + p.to_string();
    return std::nullopt;
  });
  return r;
}

SuiteResult operator_props(const Options& o) {
  SuiteResult r;
  Sampler s(o.seed, "operators");
  struct Sample {
    Poly p, q;
    std::vector<Poly> coeffs;  // combination coefficients, one per pair j<k
  };
  std::vector<Sample> samples;
  for (long i = 0; i < 200; ++i) {
    const std::size_t N = 2 + i % 4;
    std::vector<Poly> coeffs;
    for (std::size_t k = 0; k < pairs(N).size(); ++k) coeffs.push_back(s.chance(60) ? s.poly(N, 2, 2) : Poly(N));
    samples.push_back({s.poly(N, 6, 4), s.poly(N, 4, 3), std::move(coeffs)});
  }
  check_samples(r, samples, o, [](const Sample& t) -> Verdict {
    const std::size_t N = t.p.dim();
    const Poly& p = t.p;
    const Poly& q = t.q;
    Poly grad(N);
    for (std::size_t j = 1; j <= N; ++j) grad += partial(p, j) * partial(q, j);
    if (!(laplacian(p * q) == laplacian(p) * q + GaussianRational(2) * grad + p * laplacian(q))) {
      return "Laplacian product rule fails";
    }
    const Poly xx = x_dot_x(N);
    for (const auto& [j, k] : pairs(N)) {
      const Poly mp = rotation_generator(p, j, k);
      if (!(rotation_generator(p * q, j, k) == mp * q + p * rotation_generator(q, j, k))) return "M product rule fails";
      if (!(rotation_generator(p, k, j) == -mp)) return "M_jk != -M_kj";
      if (!(laplacian(mp) == rotation_generator(laplacian(p), j, k))) return "Laplacian and M_jk do not commute";
      if (!(rotation_generator(xx * q, j, k) == xx * rotation_generator(q, j, k))) return "M_jk((X.X) g) fails";
      const auto deg = homogeneous_degree(p);
      if (deg && !mp.is_zero() && homogeneous_degree(mp) != deg) return "M_jk changes the degree";
    }
    for (long d = 0; d <= 6; ++d) {
      const Poly c = homogeneous_component(p, d);
      if (!(euler(c) == GaussianRational(d) * c)) return "Euler operator is not the degree";
    }
    // A polynomial combination of the M_jk annihilates X.X and decomposes back.
    RotationCombination comb;
    const auto ps = pairs(N);
    for (std::size_t a = 0; a < ps.size(); ++a) {
      if (!t.coeffs[a].is_zero()) comb.emplace(std::make_pair(ps[a].j, ps[a].k), t.coeffs[a]);
    }
    const Derivation l = derivation_from_rotations(N, comb);
    if (!apply_derivation(l, xx).is_zero()) return "combination of M_jk does not annihilate X.X";
    const RotationCombination back = decompose_annihilating_derivation(l);
    if (!(derivation_from_rotations(N, back) == l)) return "decomposition does not rebuild the derivation";
    for (std::size_t j = 1; j <= N; ++j) {
      if (!(apply_derivation(derivation_from_rotations(N, back), Poly::variable(N, j)) == l.coeff(j))) {
        return "decomposition changes the value on X_" + std::to_string(j);
      }
    }
    if (!(apply_derivation(l, p * q) == apply_derivation(l, p) * q + p * apply_derivation(l, q))) {
      return "derivation product rule fails";
    }
    return std::nullopt;
  });
  return r;
}

SuiteResult harmonic_props(const Options& o) {
  SuiteResult r;
  Sampler s(o.seed, "harmonic-props");
  struct Sample {
    Poly h;       // nonzero harmonic
    Poly a, q;    // p = a + (X.X - c) q with a constant
    Poly hom;     // nonzero homogeneous
    Poly radial;  // polynomial in X.X
    GaussianRational c;
  };
  std::vector<Sample> samples;
  for (long i = 0; i < 200; ++i) {
    const std::size_t N = 2 + i % 4;
    Poly radial(N);
    for (long m = 0; m <= 3; ++m) radial += s.scalar() * pow(x_dot_x(N), static_cast<unsigned>(m));
    samples.push_back({s.harmonic(N, s.uniform(0, 6), 3), Poly::constant(N, s.scalar()), s.poly(N, 4, 3),
                       s.homogeneous(N, s.uniform(0, 6), 4), std::move(radial), s.nonzero_scalar()});
  }
  check_samples(r, samples, o, [](const Sample& t) -> Verdict {
    const std::size_t N = t.h.dim();
    if (divisible_by_sphere(t.h, t.c)) return "harmonic " + t.h.to_string() + " divisible by X.X - c";
    if (divisible_by_sphere(t.hom, t.c)) return "homogeneous " + t.hom.to_string() + " divisible by X.X - c";
    const Poly p = t.a + xx_minus(N, t.c) * t.q;
    for (const auto& [j, k] : pairs(N)) {
      if (!rotation_generator(t.radial, j, k).is_zero()) return "M_jk does not kill a polynomial in X.X";
      if (!divisible_by_sphere(rotation_generator(p, j, k), t.c)) return "M_jk p not in the sphere ideal";
      if (!is_harmonic(rotation_generator(t.h, j, k))) return "M_jk h is not harmonic";
    }
    if (!(project_lc(p, t.c) == t.a)) return "L_c of a constant plus the ideal is not the constant";
    if (!(project_lc(t.h, t.c) == t.h)) return "L_c is not the identity on harmonics";
    const auto deg = homogeneous_degree(t.hom);
    Poly sum(N);
    for (const EigenComponent& e : eigensplit_xx_laplacian(t.hom)) {
      const Poly lhs = x_dot_x(N) * laplacian(e.component);
      if (!(lhs == GaussianRational(BigRational(e.eigenvalue)) * e.component)) return "eigensplit component is not an eigenvector";
      if (homogeneous_degree(e.component) != deg) return "eigensplit component has the wrong degree";
      sum += e.component;
    }
    return fail_if(!(sum == t.hom), "eigensplit components do not sum to p");
  });
  // Joint kernel of all M_jk on each degree is spanned by the power of X.X.
  for (std::size_t N = 2; N <= 4; ++N) {
    for (long d = 0; d <= 6; ++d) {
      const std::vector<Poly> inv = oracle::rotation_invariants(N, d);
      const std::string where = "N=" + std::to_string(N) + " d=" + std::to_string(d);
      if (d % 2 == 1) {
        r.expect(inv.empty(), where + ": odd-degree rotation invariant found");
      } else {
        r.expect(inv.size() == 1 && polynomial_rank({inv[0], pow(x_dot_x(N), static_cast<unsigned>(d / 2))}) == 1,
                 where + ": invariants are not the multiples of (X.X)^(d/2)");
      }
    }
  }
  return r;
}

SuiteResult mean_props(const Options& o) {
  SuiteResult r;
  Sampler s(o.seed, "mean-props");
  struct Sample {
    Poly p;    // general
    Poly hom;  // homogeneous
    Poly h;    // harmonic
  };
  std::vector<Sample> samples;
  for (long i = 0; i < 200; ++i) {
    const std::size_t N = 1 + i % 4;
    samples.push_back({s.poly(N, 7, 5), s.homogeneous(N, s.uniform(0, 7), 4), s.harmonic(N, s.uniform(0, 5), 3)});
  }
  check_samples(r, samples, o, [](const Sample& t) -> Verdict {
    const std::size_t N = t.p.dim();
    if (spherical_mean(x_dot_x(N) * t.p) != spherical_mean(t.p)) return "mean changes under multiplication by X.X";
    for (const auto& [j, k] : pairs(N)) {
      if (!spherical_mean(rotation_generator(t.p, j, k)).is_zero()) return "mean of M_jk p is not 0";
    }
    if (N >= 2) {
      const long d = t.hom.degree().value();
      const GaussianRational lhs = spherical_mean(Poly::variable(N, 1) * t.hom);
      const GaussianRational rhs =
          spherical_mean(partial(t.hom, 1)) * GaussianRational(make_rational(1, static_cast<long>(N) + d - 1));
      if (lhs != rhs) return "lambda_0(X_1 p) != lambda_0(d_1 p)/(N+d-1) for " + t.hom.to_string();
    }
    if (spherical_mean(t.h) != t.h.constant_term()) return "mean of a harmonic is not its value at 0";
    return std::nullopt;
  });
  for (long N = 1; N <= 6; ++N) {
    for (long n = 0; n <= 6; ++n) {
      r.expect(spherical_mean(pow(x_dot_x(N), static_cast<unsigned>(n))).is_one(), "mean of (X.X)^n is not 1");
      r.expect(s_coeff(n + 1, N) == s_coeff(n, N) / BigRational(N + 2 * n), "s recursion fails");
    }
  }
  return r;
}

SuiteResult zonal_props(const Options& o) {
  SuiteResult r;
  Sampler s(o.seed, "zonal-props");
  struct Sample {
    UniPoly q;
    std::vector<GaussianRational> t;
    GaussianRational c;
  };
  std::vector<Sample> samples;
  for (long i = 0; i < 150; ++i) {
    const std::size_t N = 2 + i % 4;
    std::vector<GaussianRational> coeffs(static_cast<std::size_t>(s.uniform(1, 7)));
    for (auto& v : coeffs) v = s.scalar();
    coeffs.back() = s.nonzero_scalar();
    std::vector<GaussianRational> t(N);
    t[static_cast<std::size_t>(s.uniform(0, static_cast<long>(N) - 1))] = s.nonzero_scalar();
    for (auto& v : t) {
      if (s.chance(40)) v = s.rational();
    }
    if (std::all_of(t.begin(), t.end(), [](const GaussianRational& v) { return v.is_zero(); })) t[0] = 1;
    samples.push_back({UniPoly(std::move(coeffs)), std::move(t), s.scalar()});
  }
  check_samples(r, samples, o, [](const Sample& t) -> Verdict {
    const std::size_t N = t.t.size();
    Poly tx(N);
    for (std::size_t j = 0; j < N; ++j) tx += t.t[j] * Poly::variable(N, j + 1);
    return fail_if(divisible_by_sphere(t.q.evaluate(tx), t.c), "q(t.X) divisible by X.X - c for q = " + t.q.to_string());
  });

  // Simultaneous eigenvectors of degree |a| are multiples of Y.
  for (std::size_t N = 2; N <= 5; ++N) {
    const std::size_t planes = N / 2;
    for (unsigned a1 = 0; a1 <= 3; ++a1) {
      for (unsigned a2 = 0; a2 <= (planes > 1 ? 2u : 0u); ++a2) {
        std::vector<unsigned> a{a1};
        if (planes > 1) a.push_back(a2);
        const EigenSignature sig(N, a, std::vector<int>(planes, a1 % 2 == 0 ? 1 : -1));
        const std::vector<Poly> kernel = oracle::joint_eigen_kernel(sig, sig.total());
        r.expect(kernel.size() == 1 && polynomial_rank({kernel[0], eigen_monomial(sig)}) == 1,
                 "N=" + std::to_string(N) + ": joint eigenspace of degree |a| is not spanned by Y");
      }
    }
  }

  // Kernel lifts, and the even and odd dimensional constructions.
  struct Build {
    std::vector<unsigned> a;
    long d;
    Poly seed;
    std::vector<int> eps;
  };
  std::vector<Build> builds;
  for (long i = 0; i < 80; ++i) {
    const std::size_t n = 1 + i % 3;
    std::vector<unsigned> a(n);
    std::vector<int> eps(n);
    for (std::size_t j = 0; j < n; ++j) {
      a[j] = static_cast<unsigned>(s.uniform(0, 3));
      eps[j] = s.chance(50) ? 1 : -1;
    }
    const long d = n == 1 ? 0 : s.uniform(0, 3);
    const Poly seed = n == 1 ? Poly::constant(0, s.nonzero_scalar()) : s.homogeneous(n - 1, d, 3);
    builds.push_back({a, d, seed, eps});
  }
  check_samples(r, builds, o, [](const Build& b) -> Verdict {
    const std::size_t n = b.a.size();
    const Poly q = l_kernel_lift(b.a, b.d, b.seed);
    if (!l_operator(q, b.a).is_zero()) return "lift is not in the kernel of L";
    if (!(coefficient_in(q, n, 0) == embed(b.seed, n))) return "lift does not restrict to the seed";
    const EigenSignature even(2 * n, b.a, b.eps);
    const Poly p = common_eigen_harmonic(even, q);
    if (!is_harmonic(p)) return "even construction is not harmonic";
    const Poly y = eigen_monomial(even);
    for (std::size_t j = 0; j < n; ++j) {
      const GaussianRational lambda(0, static_cast<long>(even.eps()[j]) * static_cast<long>(even.a()[j]));
      if (!(rotation_generator(p, 2 * j + 1, 2 * j + 2) == lambda * p)) return "even construction has the wrong eigenvalue";
    }
    const EigenSignature odd(2 * n + 1, b.a, b.eps);
    const long total = odd.total();
    for (long extra = 0; extra <= 4; ++extra) {
      const Poly seed = Poly::term(Monomial(std::vector<Monomial::Exponent>(n, 0)), 1) *
                        pow(Poly::variable(n, 1), static_cast<unsigned>(extra / 2));
      const Poly po = odd_dim_eigen_harmonic(odd, total + extra, seed);
      if (!is_harmonic(po)) return "odd construction is not harmonic";
      if (homogeneous_degree(po) != Degree::finite(total + extra)) return "odd construction has the wrong degree";
      for (std::size_t j = 0; j < n; ++j) {
        const GaussianRational lambda(0, static_cast<long>(odd.eps()[j]) * static_cast<long>(odd.a()[j]));
        if (!(rotation_generator(po, 2 * j + 1, 2 * j + 2) == lambda * po)) return "odd construction has the wrong eigenvalue";
      }
    }
    return std::nullopt;
  });
  return r;
}

}  // namespace sphalg::verify::checks
