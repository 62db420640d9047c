#include "wallcross/verify.hpp"

#include <functional>
#include <sstream>

#include "wallcross/random_lattice.hpp"

namespace wallcross {

namespace {

// A suite body returns the number of checks made and throws on failure.
using SuiteBody = std::function<int()>;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

SuiteResult run_suite(const std::string& name, const SuiteBody& body) {
  try {
    const int checks = body();
    return {name, true, std::to_string(checks) + " checks"};
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

SurfaceData p1xp1() {
  IntMatrix g(2, 2);
  g << 0, 1, 1, 0;
  IntVector K(2);
  K << -2, -2;
  return SurfaceData(g, K);
}

MixedClass<Rational> random_mixed(Rng& rng, int b2) {
  return MixedClass<Rational>::make(Rational(uniform(rng, -3, 3)),
                                    to_rational(random_vector(rng, b2, 3)),
                                    Rational(uniform(rng, -3, 3)));
}

// A sum of up to three random monomials at the given level.
SymClass<Rational> random_sym(Rng& rng, int b2, int level) {
  SymClass<Rational> out(level);
  const int count = static_cast<int>(uniform(rng, 1, 3));
  for (int t = 0; t < count; ++t) {
    std::vector<SymFactor<Rational>> factors;
    int left = level;
    while (left > 0 && uniform(rng, 0, 2) > 0) {
      const int size = static_cast<int>(uniform(rng, 1, left));
      factors.push_back({random_mixed(rng, b2), size});
      left -= size;
    }
    out.add(SymMonomial<Rational>(level, std::move(factors)),
            Rational(uniform(rng, -5, 5)));
  }
  return out;
}

std::vector<SurfaceData> oracle_surfaces(Rng& rng, const VerifyOptions& opt) {
  std::vector<SurfaceData> out;
  for (int i = 0; i < 3; ++i)
    out.push_back(random_surface(rng, static_cast<int>(uniform(rng, 2, 3))));
  if (opt.config && opt.config->surface.b2() <= 3)
    out.push_back(opt.config->surface);
  return out;
}

IntVector nonzero_vector(Rng& rng, int n) {
  IntVector v;
  do v = random_vector(rng, n, 3);
  while (v.isZero());
  return v;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opt) {
  VerifyReport report;
  report.seed = opt.seed;
  report.level = opt.level;
  const bool full = opt.level >= 2;
  const int dmax = full ? 4 : 3;
  Rng rng(opt.seed);

  report.suites.push_back(run_suite("oracle vs closed form", [&] {
    int checks = 0;
    for (const SurfaceData& s : oracle_surfaces(rng, opt)) {
      const IntVector xi = nonzero_vector(rng, s.b2());
      const IntVector alpha = random_vector(rng, s.b2(), 3);
      for (int d = 0; d <= dmax; ++d)
        for (int x = 0; x <= d; ++x)
          for (int y = 0; x + y <= d; ++y)
            for (int c = 0; 2 * d - 2 * c - x - 2 * y >= 0; ++c) {
              const WeightSpec w{alpha, 2 * d - 2 * c - x - 2 * y, c};
              const Rational oracle =
                  integrate_oracle(s, xi_pt_monomial(s, xi, d, x, y), w);
              const Rational closed = integrate_closed(s, xi, d, x, y, w);
              std::ostringstream what;
              what << "d=" << d << " x=" << x << " y=" << y << " c=" << c
                   << ": oracle " << to_string(oracle) << " closed "
                   << to_string(closed);
              expect(oracle == closed, what.str());
              ++checks;
            }
    }
    return checks;
  }));

  report.suites.push_back(run_suite("star ring laws", [&] {
    const int triples = full ? 100 : 20;
    for (int t = 0; t < triples; ++t) {
      const int b2 = static_cast<int>(uniform(rng, 1, 3));
      const int lx = static_cast<int>(uniform(rng, 0, 2));
      const int ly = static_cast<int>(uniform(rng, 0, 4 - lx));
      const int lz = static_cast<int>(uniform(rng, 0, 4 - lx - ly));
      const auto x = random_sym(rng, b2, lx);
      const auto y = random_sym(rng, b2, ly);
      const auto z = random_sym(rng, b2, lz);
      const auto y2 = random_sym(rng, b2, ly);
      expect(x * y == y * x, "commutativity");
      expect((x * y) * z == x * (y * z), "associativity");
      expect(x * (y + y2) == x * y + x * y2, "distributivity");
      expect(SymClass<Rational>::unit(lz) * x ==
                 x * SymClass<Rational>::unit(lz),
             "unit");
    }
    return triples;
  }));

  report.suites.push_back(run_suite("binomial formula", [&] {
    int checks = 0;
    for (int t = 0; t < (full ? 20 : 5); ++t) {
      const int b2 = static_cast<int>(uniform(rng, 1, 3));
      const auto a = random_sym(rng, b2, 1);
      const auto b = random_sym(rng, b2, 1);
      for (int n = 0; n <= 4; ++n) {
        SymClass<Rational> sum(n);
        for (int k = 0; k <= n; ++k)
          sum += star_pow(a, k) * star_pow(b, n - k) * binomial(n, k);
        expect(sum == star_pow(a + b, n), "n = " + std::to_string(n));
        ++checks;
      }
    }
    return checks;
  }));

  report.suites.push_back(run_suite("diagonal reduction", [&] {
    int checks = 0;
    for (const SurfaceData& s : oracle_surfaces(rng, opt)) {
      for (int j = 1; j <= 3; ++j)
        for (int extra = 0; j + extra <= dmax; ++extra) {
          const int d = j + extra;
          std::vector<SymFactor<Rational>> factors = {
              {random_mixed(rng, s.b2()), j}};
          for (int k = 0; k < extra; ++k)
            if (uniform(rng, 0, 1)) factors.push_back({random_mixed(rng, s.b2()), 1});
          const SymMonomial<Rational> m(d, std::move(factors));
          const SymClass<Rational> reduced = reduce_diagonal(m);
          const IntVector alpha = random_vector(rng, s.b2(), 3);
          for (int b = 0; b <= 2 * d; ++b) {
            const WeightSpec w{alpha, b, 0};
            expect(integrate_oracle(s, m, w) == integrate_oracle(s, reduced, w),
                   "j=" + std::to_string(j) + " d=" + std::to_string(d) +
                       " b=" + std::to_string(b));
            ++checks;
          }
        }
    }
    return checks;
  }));

  report.suites.push_back(run_suite("pt-bar diagonal identity", [&] {
    int checks = 0;
    for (const SurfaceData& s : oracle_surfaces(rng, opt))
      for (int d = 2; d <= dmax; ++d) {
        special_pt_reduction(s, random_vector(rng, s.b2(), 3), d);
        ++checks;
      }
    return checks;
  }));

  const int segre_dmax = full ? 6 : 3;
  report.suites.push_back(run_suite("R_d identity", [&] {
    const auto ctx = symbolic_context();
    for (int d = 0; d <= segre_dmax; ++d)
      expect(equivalent(first_integral_class(ctx, d) + correction_class(ctx, d),
                        R_class(ctx, d)),
             "d = " + std::to_string(d));
    return segre_dmax + 1;
  }));

  report.suites.push_back(run_suite("U_d reproduction", [&] {
    const auto ctx = symbolic_context();
    for (int d = 0; d <= segre_dmax; ++d) derive_U(ctx, d);
    return segre_dmax + 1;
  }));

  report.suites.push_back(run_suite("pairing consistency", [&] {
    int checks = 0;
    for (const SurfaceData& s : oracle_surfaces(rng, opt)) {
      const IntVector xi = nonzero_vector(rng, s.b2());
      const auto ctx = concrete_context(s, xi);
      const IntVector alpha = random_vector(rng, s.b2(), 3);
      for (int d = 0; d <= 3; ++d) {
        const auto R = R_class(ctx, d);
        const auto Uprime = reduce_to_xi_pt(ctx, d);
        const auto U = derive_U(ctx, d);
        for (int b = 0; b <= 2 * d; ++b) {
          const WeightSpec w{alpha, b, 0};
          const Rational r = integrate_oracle(s, R, w);
          expect(r == integrate_oracle(s, Uprime, w),
                 "U'_" + std::to_string(d) + " b=" + std::to_string(b));
          if (d <= 2)
            expect(r == integrate_oracle(s, U, w),
                   "U_" + std::to_string(d) + " b=" + std::to_string(b));
          ++checks;
        }
      }
    }
    return checks;
  }));

  report.suites.push_back(run_suite("P->Q substitution", [&] {
    const Polynomial N = Polynomial::variable("N");
    const Polynomial d = Polynomial::variable("d");
    const Polynomial Z = Polynomial::variable("K2");
    const Polynomial X = Polynomial(4) * d - N - Polynomial(3);
    const auto P = p_polys(N, d, Z, X);
    auto Q = q_polys(N, d, Z);
    if (opt.mutate_q2) Q[2] += Polynomial(1);
    for (int k = 0; k <= 2; ++k)
      expect(P[k] == Q[k], "P_" + std::to_string(k) + " -> " + P[k].str() +
                               " but Q_" + std::to_string(k) + " = " +
                               Q[k].str());
    return 3;
  }));

  report.suites.push_back(run_suite("Q_{m,c} expansions", [&] {
    const Polynomial l = Polynomial::variable("l");
    const Polynomial r = Polynomial::variable("r");
    const Polynomial d = Polynomial::variable("d");
    const Polynomial Z = Polynomial::variable("K2");
    const Polynomial X = Polynomial(4) * d - Polynomial(2) * r - l - Polynomial(3);
    auto c = [](long v) { return Polynomial(v); };
    for (int k = 0; k <= 2; ++k)
      expect(q_mc(0, k, l, d, Z, X) == c(1), "Q_{0," + std::to_string(k) + "}");
    expect(q_mc(1, 0, l, d, Z, X) ==
               c(2) * l - c(2) * d - c(12) * r + c(2) * Z + c(8),
           "Q_{1,0}");
    expect(q_mc(1, 1, l, d, Z, X) ==
               c(2) * l - c(2) * d - c(12) * r + c(2) * Z + c(29),
           "Q_{1,1}");
    expect(q_mc(2, 0, l, d, Z, X) ==
               c(72) * r * r - c(24) * r * l + c(24) * d * r -
                   c(24) * Z * r + c(2) * l * l - c(4) * d * l +
                   c(4) * Z * l + c(2) * d * d - c(4) * d * Z +
                   c(2) * Z * Z - c(198) * r + c(21) * l - c(18) * d +
                   c(18) * Z + c(49),
           "Q_{2,0}");
    return 6;
  }));

  report.suites.push_back(run_suite("r = 0 reduction", [&] {
    for (int t = 0; t < 10; ++t) {
      const std::int64_t N = uniform(rng, 0, 30);
      const std::int64_t d = uniform(rng, 0, 8);
      const std::int64_t Ksq = uniform(rng, -10, 10);
      const std::int64_t e = uniform(rng, -5, 5);
      expect(leading_terms(N, 0, d, e, Ksq, 4 * d - N - 3) ==
                 leading_terms_top(N, d, e, Ksq),
             "N=" + std::to_string(N) + " d=" + std::to_string(d));
    }
    return 10;
  }));

  report.suites.push_back(run_suite("exact vs leading", [&] {
    struct Case {
      SurfaceData s;
      ChernData chern;
      WallClass wall;
    };
    std::vector<Case> cases;
    {
      const SurfaceData s = p1xp1();
      ChernData chern{IntVector::Ones(2), 2};
      IntVector xi(2), hm(2), hp(2);
      xi << -1, 1;
      hm << 1, 2;
      hp << 2, 1;
      cases.push_back({s, chern, make_wall_class(s, chern, xi, hm, hp)});
    }
    for (int i = 0; i < (full ? 5 : 2); ++i) {
      WallProblem p = random_wall_problem(
          rng, static_cast<int>(uniform(rng, 2, 3)), uniform(rng, 0, 2));
      cases.push_back({p.surface, p.chern, p.wall});
    }
    if (opt.config && opt.config->surface.b2() <= opt.config->caps.max_b2) {
      const ProblemConfig& cfg = *opt.config;
      for (const WallClass& w : enumerate_separating_classes(
               cfg.surface, cfg.chern, cfg.h_minus, cfg.h_plus))
        if (w.d <= 2) cases.push_back({cfg.surface, cfg.chern, w});
    }
    int checks = 0;
    for (const Case& c : cases) {
      const std::int64_t N = c.chern.expected_dimension(c.s);
      const std::int64_t r = uniform(rng, 0, N / 2);
      const auto poly = delta_leading(c.s, c.chern, c.wall, N - 2 * r, r);
      for (int a = 0; a < (full ? 20 : 5); ++a) {
        const IntVector alpha = random_vector(rng, c.s.b2(), 3);
        expect(delta_exact_small_d(c.s, c.chern, c.wall, N - 2 * r, r, alpha) ==
                   poly.evaluate(c.s, alpha),
               "xi=" + to_string(c.wall.xi) + " alpha=" + to_string(alpha));
        ++checks;
      }
    }
    return checks;
  }));

  report.suites.push_back(run_suite("enumeration completeness", [&] {
    const int problems = full ? 10 : 3;
    for (int t = 0; t < problems; ++t) {
      const EnumerationProblem p = random_enumeration_problem(
          rng, static_cast<int>(uniform(rng, 2, 3)), 20);
      const auto fast = enumerate_separating_classes(p.surface, p.chern,
                                                     p.h_minus, p.h_plus);
      const auto box =
          enumerate_in_box(p.surface, p.chern, p.h_minus, p.h_plus, 20);
      expect(fast.size() == box.size(), "class counts differ");
      for (std::size_t i = 0; i < fast.size(); ++i) {
        expect(fast[i].xi == box[i].xi, "classes differ");
        const WallClass& w = fast[i];
        const std::int64_t dim = p.chern.expected_dimension(p.surface);
        expect(2 * w.d + w.rk_minus + w.rk_plus - 1 == dim, "dimension count");
        expect(ext_rank(p.surface, w.xi, w.d, 0, ExtSide::Minus) == w.rk_minus,
               "rank minus");
        expect(ext_rank(p.surface, w.xi, 0, w.d, ExtSide::Plus) == w.rk_plus,
               "rank plus");
      }
    }
    return problems;
  }));

  report.suites.push_back(run_suite("polarization swap", [&] {
    int checks = 0;
    for (int t = 0; t < (full ? 5 : 2); ++t) {
      const EnumerationProblem p = random_enumeration_problem(
          rng, static_cast<int>(uniform(rng, 2, 3)), 20);
      const std::int64_t N = p.chern.expected_dimension(p.surface);
      if (N < 0) continue;
      const auto forward =
          total_change(p.surface, p.chern, p.h_minus, p.h_plus, N, 0);
      const auto backward =
          total_change(p.surface, p.chern, p.h_plus, p.h_minus, N, 0);
      const IntVector alpha = random_vector(rng, p.surface.b2(), 3);
      expect(forward.evaluate(p.surface, alpha).total ==
                 -backward.evaluate(p.surface, alpha).total,
             "total change is not antisymmetric");
      ++checks;
    }
    return checks;
  }));

  return report;
}

}  // namespace wallcross
