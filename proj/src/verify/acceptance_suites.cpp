#include <chrono>

#include "sampling.hpp"
#include "sphalg/harmonic.hpp"
#include "sphalg/mean.hpp"
#include "sphalg/ops.hpp"
#include "sphalg/oracles.hpp"
#include "sphalg/zonal.hpp"
#include "suites.hpp"

namespace sphalg::verify::checks {

namespace {

std::string dims(std::size_t N) { return "N=" + std::to_string(N); }

GaussianRational integer(long v) { return GaussianRational(v); }

Poly xx_minus(std::size_t N, const GaussianRational& c) { return x_dot_x(N) - Poly::constant(N, c); }

bool divisible_by_sphere(const Poly& p, const GaussianRational& c) {
  return divmod_monic(p, xx_minus(p.dim(), c), p.dim()).remainder.is_zero();
}

}  // namespace

SuiteResult magic(const Options& o) {
  SuiteResult r;
  const auto start = std::chrono::steady_clock::now();
  Sampler s(o.seed, "magic");
  std::vector<Poly> samples;
  for (long i = 0; i < 500; ++i) {
    const std::size_t N = 2 + i % 4;
    samples.push_back(s.poly(N, i % 11, 6) + s.homogeneous(N, i % 11, 4));
  }
  check_samples(r, samples, o, [](const Poly& p) -> Verdict {
    const long N = static_cast<long>(p.dim());
    const Poly lhs = x_dot_x(p.dim()) * laplacian(p);
    const Poly e = euler(p);
    const Poly rhs = euler(e) + integer(N - 2) * e + casimir(p);
    return fail_if(!(lhs == rhs), dims(p.dim()) + " p=" + p.to_string());
  });
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  r.expect(took.count() < 30.0, "runtime " + std::to_string(took.count()) + " s exceeds 30 s");
  return r;
}

SuiteResult commutators(const Options& o) {
  SuiteResult r;
  Sampler s(o.seed, "commutators");
  struct Sample {
    std::size_t j, k, l, m;  // l == 0 means [M_jk, M.M]
    Poly p;
  };
  std::vector<Sample> samples;
  for (std::size_t N = 2; N <= 5; ++N) {
    for (std::size_t j = 1; j <= N; ++j) {
      for (std::size_t k = 1; k <= N; ++k) {
        if (j == k) continue;
        samples.push_back({j, k, 0, 0, s.poly(N, 6, 4)});
        for (std::size_t l = 1; l <= N; ++l) {
          for (std::size_t m = 1; m <= N; ++m) {
            if (l != m) samples.push_back({j, k, l, m, s.poly(N, 5, 4)});
          }
        }
      }
    }
  }
  check_samples(r, samples, o, [](const Sample& t) -> Verdict {
    const op::Rotation a{t.j, t.k};
    if (t.l == 0) {
      return fail_if(!commutator(a, op::Casimir{}, t.p).is_zero(),
                     "[M" + std::to_string(t.j) + std::to_string(t.k) + ", M.M] != 0 on " + t.p.to_string());
    }
    const Poly got = commutator(a, op::Rotation{t.l, t.m}, t.p);
    const Poly want = oracle::table_rotation_commutator(t.j, t.k, t.l, t.m, t.p);
    return fail_if(!(got == want), "[M" + std::to_string(t.j) + std::to_string(t.k) + ", M" + std::to_string(t.l) +
                                       std::to_string(t.m) + "] mismatch on " + t.p.to_string());
  });
  return r;
}

SuiteResult dimension(const Options& o) {
  SuiteResult r;
  std::vector<std::pair<std::size_t, long>> samples;
  for (std::size_t N = 2; N <= 5; ++N) {
    for (long d = 0; d <= 8; ++d) samples.emplace_back(N, d);
  }
  check_samples(r, samples, o, [](const std::pair<std::size_t, long>& t) -> Verdict {
    const auto [N, d] = t;
    const std::vector<Poly> basis = harmonic_basis(N, d);
    const std::string where = dims(N) + " d=" + std::to_string(d);
    const BigInt rank_formula = harmonic_dimension(N, d);
    if (rank_formula != harmonic_dimension_by_difference(N, d)) return where + ": the two dimension formulas differ";
    if (BigInt(static_cast<unsigned long>(basis.size())) != rank_formula) {
      return where + ": basis size " + std::to_string(basis.size()) + " != " + rank_formula.get_str();
    }
    if (polynomial_rank(basis) != basis.size()) return where + ": basis is linearly dependent";
    for (const Poly& h : basis) {
      if (!is_harmonic(h)) return where + ": non-harmonic element " + h.to_string();
      if (homogeneous_degree(h) != Degree::finite(d)) return where + ": element of wrong degree " + h.to_string();
    }
    return std::nullopt;
  });
  return r;
}

SuiteResult worked_mean(const Options&) {
  SuiteResult r;
  const GaussianRational want(make_rational(1, 512));
  const Poly p = Poly::term(Monomial{4, 6, 0, 0}, 1);
  r.expect(spherical_mean(p) == want, "monomial route: " + spherical_mean(p).to_string());
  r.expect(spherical_mean_via_laplacian(p) == want, "Laplacian route: " + spherical_mean_via_laplacian(p).to_string());
  const Poly top = laplacian_power(p, 5);
  r.expect(top == Poly::constant(4, GaussianRational(BigRational(10 * factorial(4) * factorial(6)))),
           "Laplacian^5 = " + top.to_string());
  r.expect(s_coeff(5, 4) == make_rational(1, 12 * 10 * 8 * 6 * 4), "s_{10,4} = " + s_coeff(5, 4).get_str());
  std::vector<Poly> forms(4, Poly::variable(4, 1));
  forms.insert(forms.end(), 6, Poly::variable(4, 2));
  r.expect(pairing_mean(forms) == want, "pairing route: " + pairing_mean(forms).to_string());
  return r;
}

SuiteResult mean_oracles(const Options& o) {
  SuiteResult r;
  Sampler s(o.seed, "mean-oracles");
  struct Sample {
    bool product;  // p is the product of forms
    std::vector<Poly> forms;
    Poly p;
  };
  std::vector<Sample> samples;
  for (long i = 0; i < 240; ++i) {
    const std::size_t N = 1 + i % 4;
    const long k = i % 9;
    Sample t{true, {}, Poly::constant(N, 1)};
    for (long f = 0; f < k; ++f) {
      t.forms.push_back(s.linear_form(N, 3));
      t.p = t.p * t.forms.back();
    }
    samples.push_back(std::move(t));
  }
  for (long i = 0; i < 100; ++i) {
    const std::size_t N = 1 + i % 4;
    samples.push_back({false, {}, s.homogeneous(N, i % 9, 5)});
  }
  check_samples(r, samples, o, [](const Sample& t) -> Verdict {
    const GaussianRational a = spherical_mean(t.p);
    const GaussianRational b = spherical_mean_via_laplacian(t.p);
    if (a != b) return "monomial " + a.to_string() + " vs Laplacian " + b.to_string() + " on " + t.p.to_string();
    if (!t.product) return std::nullopt;
    if (t.forms.size() % 2 == 1) return fail_if(!a.is_zero(), "odd degree mean is " + a.to_string());
    const GaussianRational c = pairing_mean(t.forms);
    return fail_if(a != c, "monomial " + a.to_string() + " vs pairing " + c.to_string() + " on " + t.p.to_string());
  });
  return r;
}

SuiteResult multinomial(const Options&) {
  SuiteResult r;
  for (long N = 1; N <= 6; ++N) {
    for (long n = 0; n <= 6; ++n) {
      const BigInt lhs = oracle::central_binomial_sum(N, n);
      const BigRational rhs = oracle::central_binomial_closed_form(N, n);
      r.expect(BigRational(lhs) == rhs, "N=" + std::to_string(N) + " n=" + std::to_string(n) + ": " + lhs.get_str() +
                                            " != " + rhs.get_str());
    }
    const BigInt spot = oracle::central_binomial_sum(N, 2);
    r.expect(spot == 2 * N * N + 4 * N, "n=2 spot value at N=" + std::to_string(N) + " is " + spot.get_str());
  }
  return r;
}

SuiteResult decomposition(const Options& o) {
  SuiteResult r;
  Sampler s(o.seed, "decomposition");

  std::vector<Poly> round_trip;
  for (long i = 0; i < 500; ++i) round_trip.push_back(s.poly(1 + i % 5, i % 11, 6));
  check_samples(r, round_trip, o, [](const Poly& p) -> Verdict {
    const HarmonicDecomposition h = harmonic_decompose(p);
    if (!(reconstruct(h) == p)) return "reconstruction differs for " + p.to_string();
    const auto deg = homogeneous_degree(p);
    for (std::size_t j = 0; j < h.parts.size(); ++j) {
      if (!is_harmonic(h.parts[j])) return "part " + std::to_string(j) + " not harmonic for " + p.to_string();
      if (deg && deg->is_finite() && !h.parts[j].is_zero() &&
          homogeneous_degree(h.parts[j]) != Degree::finite(deg->value() - 2 * static_cast<long>(j))) {
        return "part " + std::to_string(j) + " has the wrong degree for " + p.to_string();
      }
    }
    return std::nullopt;
  });

  std::vector<HarmonicDecomposition> unique;
  for (long i = 0; i < 500; ++i) {
    const std::size_t N = 1 + i % 5;
    const long d = i % 11;
    const long d2 = s.uniform(0, 10);
    const bool mixed = s.chance(30);
    HarmonicDecomposition h{N, {}};
    for (long j = 0; 2 * j <= std::max(d, mixed ? d2 : 0L); ++j) {
      Poly part(N);
      if (2 * j <= d && s.chance(70)) part += s.harmonic(N, d - 2 * j, 4);
      if (mixed && 2 * j <= d2 && d2 != d && s.chance(70)) part += s.harmonic(N, d2 - 2 * j, 3);
      h.parts.push_back(std::move(part));
    }
    while (h.parts.size() > 1 && h.parts.back().is_zero()) h.parts.pop_back();
    unique.push_back(std::move(h));
  }
  check_samples(r, unique, o, [](const HarmonicDecomposition& h) -> Verdict {
    const Poly p = reconstruct(h);
    return fail_if(!(harmonic_decompose(p) == h), "parts not recovered for " + p.to_string());
  });

  std::vector<Poly> small;
  for (long i = 0; i < 150; ++i) small.push_back(s.poly(1 + i % 3, i % 7, 5));
  check_samples(r, small, o, [](const Poly& p) -> Verdict {
    const auto brute = oracle::brute_force_decompose(p);
    if (!brute) return "linear system not uniquely solvable for " + p.to_string();
    return fail_if(!(*brute == harmonic_decompose(p)), "brute-force solve disagrees on " + p.to_string());
  });
  return r;
}

SuiteResult mean_value(const Options& o) {
  SuiteResult r;
  Sampler s(o.seed, "mean-value");
  struct Sample {
    Poly p;
    bool expect_harmonic;
  };
  std::vector<Sample> samples;
  for (std::size_t N = 2; N <= 4; ++N) {
    for (long d = 0; d <= 6; ++d) {
      for (Poly& h : harmonic_basis(N, d)) samples.push_back({std::move(h), true});
    }
  }
  for (long i = 0; i < 120; ++i) {
    Poly p = s.poly(1 + i % 4, 5, 4);
    while (is_harmonic(p)) p = s.poly(1 + i % 4, 5, 4);
    samples.push_back({std::move(p), false});
  }
  check_samples(r, samples, o, [](const Sample& t) -> Verdict {
    const bool mv = check_mean_value_harmonic(t.p);
    const bool h = is_harmonic(t.p);
    if (mv != h) return "mean-value test " + std::to_string(mv) + " but harmonic " + std::to_string(h) + ": " + t.p.to_string();
    return fail_if(h != t.expect_harmonic, "unexpected harmonicity for " + t.p.to_string());
  });
  return r;
}

SuiteResult rotation(const Options& o) {
  SuiteResult r;
  Sampler s(o.seed, "rotation");
  std::vector<std::vector<OrthoMatrix>> libs;
  for (std::size_t N = 1; N <= 4; ++N) {
    libs.push_back(orthogonal_matrix_library(N));
    // O_1 over the rationals is {1, -1}; from N = 2 on the library must hold ten.
    const std::size_t need = N == 1 ? 2 : 10;
    r.expect(libs.back().size() >= need, dims(N) + ": only " + std::to_string(libs.back().size()) + " matrices");
  }
  std::vector<Poly> samples;
  for (std::size_t N = 1; N <= 4; ++N) {
    for (long i = 0; i < 100; ++i) samples.push_back(s.poly(N, 5, 3));
  }
  check_samples(r, samples, o, [&libs](const Poly& p) -> Verdict {
    const GaussianRational mean = spherical_mean(p);
    const Poly lap = laplacian(p);
    const auto& lib = libs[p.dim() - 1];
    for (std::size_t a = 0; a < lib.size(); ++a) {
      const Poly rotated = rotate(p, lib[a]);
      if (spherical_mean(rotated) != mean) return "mean changes under matrix " + std::to_string(a) + " for " + p.to_string();
      if (!(laplacian(rotated) == rotate(lap, lib[a]))) {
        return "Laplacian does not commute with matrix " + std::to_string(a) + " for " + p.to_string();
      }
    }
    return std::nullopt;
  });
  return r;
}

SuiteResult zonal(const Options& o) {
  SuiteResult r;
  const GaussianRational alphas[] = {0, 1, 2, GaussianRational(make_rational(1, 4))};
  for (long N = 3; N <= 5; ++N) {
    for (long n = 0; n <= 8; ++n) {
      for (const GaussianRational& alpha : alphas) {
        const UniPoly q = gegenbauer_solve(n, N, alpha);
        const std::string where = "N=" + std::to_string(N) + " n=" + std::to_string(n) + " alpha=" + alpha.to_string();
        r.expect(gegenbauer_residual(q, n, N, alpha).is_zero(), where + ": nonzero residual for " + q.to_string());
        r.expect(q.degree() == n && q.coeff(n).is_one(), where + ": not monic of degree n");
        bool parity = true;
        for (long k = 0; k <= q.degree(); ++k) parity = parity && ((k - n) % 2 == 0 || q.coeff(k).is_zero());
        r.expect(parity, where + ": wrong parity " + q.to_string());
        if (alpha.is_zero()) {
          std::vector<GaussianRational> yn(static_cast<std::size_t>(n) + 1);
          yn[n] = 1;
          r.expect(q == UniPoly(yn), where + ": expected Y^n, got " + q.to_string());
        }
      }
    }
  }

  Sampler s(o.seed, "zonal");
  struct Sample {
    std::vector<GaussianRational> t;
    GaussianRational c;
    long n;
  };
  std::vector<Sample> samples;
  for (long i = 0; i < 150; ++i) {
    const std::size_t N = 3 + i % 3;
    Sample t{std::vector<GaussianRational>(N), s.chance(85) ? s.nonzero_scalar() : GaussianRational(), i % 7};
    while (std::all_of(t.t.begin(), t.t.end(), [](const GaussianRational& v) { return v.is_zero(); })) {
      for (auto& v : t.t) v = s.chance(60) ? GaussianRational(s.rational()) : GaussianRational();
    }
    samples.push_back(std::move(t));
  }
  check_samples(r, samples, o, [](const Sample& t) -> Verdict {
    const std::size_t N = t.t.size();
    const ZonalHarmonic z = zonal_harmonic(t.t, t.c, t.n);
    const std::string where = dims(N) + " n=" + std::to_string(t.n) + " c=" + t.c.to_string();
    if (!is_harmonic(z.h)) return where + ": h not harmonic";
    if (homogeneous_degree(z.h) != Degree::finite(t.n)) return where + ": h not homogeneous of degree n";
    Poly tx(N);
    for (std::size_t j = 0; j < N; ++j) tx += t.t[j] * Poly::variable(N, j + 1);
    return fail_if(!divisible_by_sphere(z.q.evaluate(tx) - z.h, t.c), where + ": q(t.X) - h not in the sphere ideal");
  });
  return r;
}

SuiteResult eigen(const Options& o) {
  SuiteResult r;
  std::vector<EigenSignature> samples;
  for (std::size_t N = 2; N <= 5; ++N) {
    const std::size_t planes = N / 2;
    // Odometer over exponent vectors with |a| <= 5 and all sign patterns.
    std::vector<unsigned> a(planes, 0);
    while (true) {
      long total = 0;
      for (unsigned v : a) total += v;
      if (total <= 5) {
        for (unsigned mask = 0; mask < (1u << planes); ++mask) {
          std::vector<int> eps(planes);
          bool canonical = true;
          for (std::size_t j = 0; j < planes; ++j) {
            eps[j] = (mask >> j) & 1u ? -1 : 1;
            canonical = canonical && !(a[j] == 0 && eps[j] == -1);
          }
          if (canonical) samples.emplace_back(N, a, eps);
        }
      }
      std::size_t j = 0;
      while (j < planes && a[j] == 5) a[j++] = 0;
      if (j == planes) break;
      ++a[j];
    }
  }
  check_samples(r, samples, o, [](const EigenSignature& sig) -> Verdict {
    const Poly y = eigen_monomial(sig);
    const long N = static_cast<long>(sig.dim());
    const long t = sig.total();
    std::string where = dims(sig.dim()) + " a=(";
    for (unsigned v : sig.a()) where += std::to_string(v) + ",";
    where += ")";
    if (!is_harmonic(y)) return where + ": Y not harmonic";
    if (homogeneous_degree(y) != Degree::finite(t)) return where + ": Y not homogeneous of degree |a|";
    for (std::size_t j = 0; j < sig.planes(); ++j) {
      const GaussianRational lambda(0, static_cast<long>(sig.eps()[j]) * static_cast<long>(sig.a()[j]));
      if (!(rotation_generator(y, 2 * j + 1, 2 * j + 2) == lambda * y)) {
        return where + ": wrong eigenvalue for plane " + std::to_string(j + 1);
      }
    }
    return fail_if(!(casimir(y) == integer(-t * (t + N - 2)) * y), where + ": Casimir eigenvalue differs");
  });
  return r;
}

SuiteResult lc(const Options& o) {
  SuiteResult r;
  Sampler s(o.seed, "lc");
  struct Sample {
    Poly p;
    GaussianRational c;
  };
  std::vector<Sample> samples;
  for (long i = 0; i < 220; ++i) samples.push_back({s.poly(1 + i % 5, i % 9, 5), s.scalar()});
  check_samples(r, samples, o, [](const Sample& t) -> Verdict {
    const Poly h = project_lc(t.p, t.c);
    const std::string where = "c=" + t.c.to_string() + " p=" + t.p.to_string();
    if (!is_harmonic(h)) return where + ": L_c p not harmonic";
    if (!divisible_by_sphere(t.p - h, t.c)) return where + ": p - L_c p not in the sphere ideal";
    const std::size_t N = t.p.dim();
    for (std::size_t j = 1; j <= N; ++j) {
      for (std::size_t k = j + 1; k <= N; ++k) {
        if (!(project_lc(rotation_generator(t.p, j, k), t.c) == rotation_generator(h, j, k))) {
          return where + ": L_c does not commute with M" + std::to_string(j) + std::to_string(k);
        }
      }
    }
    return std::nullopt;
  });
  return r;
}

}  // namespace sphalg::verify::checks
