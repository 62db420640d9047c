#include <gtest/gtest.h>

#include "test_helpers.hpp"
#include "wallcross/random_lattice.hpp"
#include "wallcross/symmetric_ring.hpp"

using namespace wallcross;
using namespace wallcross::testing;

namespace {

using Sym = SymClass<Rational>;
using Mono = SymMonomial<Rational>;
using MC = MixedClass<Rational>;

MC divisor(const IntVector& v) { return MC::divisor(to_rational(v)); }

MC random_mixed(Rng& rng, int b2) {
  return MC::make(Rational(uniform(rng, -3, 3)),
                  to_rational(random_vector(rng, b2, 3)),
                  Rational(uniform(rng, -3, 3)));
}

Sym random_sym(Rng& rng, int b2, int level) {
  Sym out(level);
  for (int t = 0; t < 3; ++t) {
    std::vector<SymFactor<Rational>> factors;
    int left = level;
    while (left > 0 && uniform(rng, 0, 2) > 0) {
      const int size = static_cast<int>(uniform(rng, 1, left));
      factors.push_back({random_mixed(rng, b2), size});
      left -= size;
    }
    out.add(Mono(level, std::move(factors)), Rational(uniform(rng, -4, 4)));
  }
  return out;
}

}  // namespace

TEST(StarProduct, UnitPads) {
  const Sym x = Sym::diagonal(divisor(vec({1, 2})), 2);
  const Sym padded = Sym::unit(3) * x;
  EXPECT_EQ(padded.level(), 5);
  ASSERT_EQ(padded.size(), 1u);
  EXPECT_EQ(padded.terms().begin()->first.padding(), 3);
  EXPECT_EQ(padded, x * Sym::unit(3));
}

TEST(StarProduct, Commutes) {
  const Sym a = Sym::diagonal(divisor(vec({1, 0})), 2);
  const Sym b = Sym::diagonal(MC::point(2), 2);
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a * b).size(), 1u);
}

TEST(StarProduct, UnitFactorsOfSizeOneAreAbsorbed) {
  const Sym one = Sym::diagonal(MC::unit(2), 1);
  EXPECT_EQ(one, Sym::unit(1));
  EXPECT_NE(Sym::diagonal(MC::unit(2), 2), Sym::unit(2));
}

TEST(StarProduct, RingLawsOnRandomClasses) {
  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const int b2 = static_cast<int>(uniform(rng, 1, 3));
    const int lx = static_cast<int>(uniform(rng, 0, 2));
    const int ly = static_cast<int>(uniform(rng, 0, 4 - lx));
    const int lz = static_cast<int>(uniform(rng, 0, 4 - lx - ly));
    const Sym x = random_sym(rng, b2, lx);
    const Sym y = random_sym(rng, b2, ly);
    const Sym y2 = random_sym(rng, b2, ly);
    const Sym z = random_sym(rng, b2, lz);
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + y2), x * y + x * y2);
    ASSERT_EQ((x * y).level(), lx + ly);
  }
}

TEST(StarProduct, BinomialFormula) {
  Rng rng(43);
  for (int t = 0; t < 20; ++t) {
    const Sym a = random_sym(rng, 2, 1);
    const Sym b = random_sym(rng, 2, 1);
    for (int n = 0; n <= 4; ++n) {
      Sym sum(n);
      for (int k = 0; k <= n; ++k)
        sum += star_pow(a, k) * star_pow(b, n - k) * binomial(n, k);
      EXPECT_EQ(sum, star_pow(a + b, n));
    }
  }
  const Sym a = Sym::diagonal(divisor(vec({1, 0})), 1);
  const Sym b = Sym::diagonal(divisor(vec({0, 1})), 1);
  EXPECT_EQ(star_pow(a + b, 2), star_pow(a, 2) + a * b * Rational(2) + star_pow(b, 2));
}

TEST(StarProduct, LevelMismatchIsAnError) {
  EXPECT_THROW(Sym::unit(1) + Sym::unit(2), Error);
  EXPECT_THROW(Mono(1, {{MC::point(2), 2}}), Error);
}

TEST(StarProduct, ExpansionIsMultilinear) {
  const MC a = MC::make(Q(2), to_rational(vec({1, -1})), Q(3));
  const Sym x = Sym::diagonal(a, 2);
  Sym by_hand(2);
  by_hand += Sym::diagonal(MC::unit(2), 2) * Rational(2);
  by_hand += Sym::diagonal(divisor(vec({1, 0})), 2);
  by_hand -= Sym::diagonal(divisor(vec({0, 1})), 2);
  by_hand += Sym::diagonal(MC::point(2), 2) * Rational(3);
  EXPECT_EQ(x.expanded(), by_hand);
  EXPECT_TRUE(equivalent(x, by_hand));
  // codimensions 2, 3, 3, 4
  EXPECT_EQ(x.truncated(2).size(), 1u);
  EXPECT_EQ(x.truncated(3).size(), 3u);
  EXPECT_EQ(x.truncated(4).size(), 4u);
}

TEST(Oracle, SmallExamples) {
  const SurfaceData s = p1xp1();
  const IntVector alpha = vec({2, 3});
  const Rational q = s.square(alpha);
  const Rational xa = s.pair(vec({-1, 1}), alpha);
  EXPECT_EQ(integrate_oracle(s, Mono(1, {{divisor(vec({-1, 1})), 1}}),
                             {alpha, 1, 0}),
            xa);
  EXPECT_EQ(integrate_oracle(s, Mono(2), {alpha, 4, 0}), 6 * q * q);
  EXPECT_EQ(integrate_oracle(s, Mono(2, {{MC::unit(2), 2}}), {alpha, 2, 0}),
            4 * q);
  // Degree mismatch integrates to zero.
  EXPECT_EQ(integrate_oracle(s, Mono(2), {alpha, 3, 0}), 0);
  EXPECT_EQ(integrate_oracle(s, Mono(0), {alpha, 0, 0}), 1);
  EXPECT_EQ(integrate_oracle(s, Mono(0), {alpha, 1, 0}), 0);
}

TEST(Oracle, Caps) {
  const SurfaceData s = p1xp1();
  try {
    integrate_oracle(s, Mono(6), {vec({1, 1}), 12, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LevelTooLarge);
  }
  OracleCaps caps;
  caps.max_b2 = 1;
  EXPECT_THROW(integrate_oracle(s, Mono(1), {vec({1, 1}), 2, 0}, caps), Error);
  caps = {};
  caps.symmetrize = true;
  EXPECT_THROW(integrate_oracle(s, Mono(4), {vec({1, 1}), 8, 0}, caps), Error);
}

TEST(Oracle, SymmetrizationCanBeDropped) {
  Rng rng(47);
  for (int t = 0; t < 15; ++t) {
    const SurfaceData s = random_surface(rng, 2);
    const int d = static_cast<int>(uniform(rng, 1, 3));
    std::vector<SymFactor<Rational>> factors;
    int left = d;
    while (left > 0) {
      const int size = static_cast<int>(uniform(rng, 1, left));
      factors.push_back({random_mixed(rng, 2), size});
      left -= size;
    }
    const Mono m(d, std::move(factors));
    OracleCaps slow;
    slow.symmetrize = true;
    const IntVector alpha = random_vector(rng, 2, 3);
    for (int c = 0; c <= d; ++c)
      for (int b = 0; b + 2 * c <= 2 * d; ++b)
        EXPECT_EQ(integrate_oracle(s, m, {alpha, b, c}),
                  integrate_oracle(s, m, {alpha, b, c}, slow));
  }
}

TEST(ClosedForm, Examples) {
  const SurfaceData s = p1xp1();
  const IntVector xi = vec({-1, 1});
  const IntVector alpha = vec({2, 3});
  const Rational q = s.square(alpha);
  const Rational xa = s.pair(xi, alpha);
  EXPECT_EQ(integrate_closed(s, xi, 1, 1, 0, {alpha, 1, 0}), xa);
  EXPECT_EQ(integrate_closed(s, xi, 2, 0, 0, {alpha, 4, 0}), 6 * q * q);
  EXPECT_EQ(integrate_closed(s, xi, 2, 1, 1, {alpha, 1, 0}), xa);
}

TEST(ClosedForm, DegreeMismatch) {
  const SurfaceData s = p1xp1();
  const IntVector xi = vec({-1, 1});
  for (const auto& [d, x, y, b, c] :
       std::vector<std::array<int, 5>>{{2, 0, 0, 3, 0}, {1, 1, 1, 0, 0},
                                       {1, 0, 0, 0, 2}}) {
    try {
      integrate_closed(s, xi, d, x, y, {vec({1, 1}), b, c});
      FAIL() << d << x << y << b << c;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::DegreeMismatch);
    }
  }
  EXPECT_EQ(integrate_closed(s, xi, 1, 0, 1, {vec({1, 2}), 0, 0}), 1);
  // c > d - x - y is zero, as is the oracle value.
  const WeightSpec w{vec({1, 2}), 0, 1};
  EXPECT_EQ(integrate_closed(s, xi, 2, 2, 0, w), 0);
  EXPECT_EQ(integrate_oracle(s, xi_pt_monomial(s, xi, 2, 2, 0), w), 0);
}

// The pure alpha-bar case is the c = 0 slice of the general formula.
TEST(ClosedForm, PureWeightSlice) {
  Rng rng(53);
  const SurfaceData s = random_surface(rng, 3);
  const IntVector xi = random_vector(rng, 3, 2);
  const IntVector alpha = random_vector(rng, 3, 3);
  const Rational q = s.square(alpha);
  const Rational xa = s.pair(xi, alpha);
  for (int d = 0; d <= 6; ++d)
    for (int x = 0; x <= d; ++x)
      for (int y = 0; x + y <= d; ++y) {
        const int b = 2 * d - x - 2 * y;
        const Rational expected = factorial(b) / pow2(d - x - y) *
                                  power(q, d - x - y) * power(xa, x);
        EXPECT_EQ(integrate_closed(s, xi, d, x, y, {alpha, b, 0}), expected);
      }
}

TEST(ClosedForm, MatchesOracleOnRandomSurfaces) {
  Rng rng(59);
  for (int t = 0; t < 2; ++t) {
    const SurfaceData s = random_surface(rng, 2 + t);
    const IntVector xi = random_vector(rng, s.b2(), 2);
    const IntVector alpha = random_vector(rng, s.b2(), 3);
    for (int d = 0; d <= 3; ++d)
      for (int x = 0; x <= d; ++x)
        for (int y = 0; x + y <= d; ++y)
          for (int c = 0; 2 * d - 2 * c - x - 2 * y >= 0; ++c) {
            const WeightSpec w{alpha, 2 * d - 2 * c - x - 2 * y, c};
            EXPECT_EQ(integrate_oracle(s, xi_pt_monomial(s, xi, d, x, y), w),
                      integrate_closed(s, xi, d, x, y, w));
          }
  }
}

TEST(DiagonalReduction, Examples) {
  const MC beta = MC::make(Q(2), to_rational(vec({1, 3})), Q(-1));
  EXPECT_EQ(reduce_diagonal(Mono(1, {{beta, 1}})).expanded(),
            Sym(Mono(1, {{beta, 1}})).expanded());
  const MC a = divisor(vec({1, 3}));
  const Sym pt1 = Sym::diagonal(MC::point(2), 1);
  EXPECT_EQ(reduce_diagonal(Mono(2, {{a, 2}})).expanded(),
            (Sym::diagonal(a, 1) * pt1 * Rational(2)).expanded());
  EXPECT_EQ(reduce_diagonal(Mono(2, {{MC::unit(2), 2}})).expanded(),
            (Sym::unit(1) * pt1 * Rational(4)).expanded());
  EXPECT_EQ(reduce_diagonal(Mono(3, {{MC::point(2), 3}})).expanded(),
            star_pow(pt1, 3).expanded());
}

TEST(DiagonalReduction, PreservesPureWeightIntegrals) {
  Rng rng(61);
  for (int t = 0; t < 12; ++t) {
    const SurfaceData s = random_surface(rng, static_cast<int>(uniform(rng, 2, 3)));
    const int j = static_cast<int>(uniform(rng, 1, 3));
    const int d = j + static_cast<int>(uniform(rng, 0, 1));
    std::vector<SymFactor<Rational>> factors = {{random_mixed(rng, s.b2()), j}};
    if (d > j) factors.push_back({random_mixed(rng, s.b2()), 1});
    const Mono m(d, std::move(factors));
    const Sym reduced = reduce_diagonal(m);
    const IntVector alpha = random_vector(rng, s.b2(), 3);
    for (int b = 0; b <= 2 * d; ++b)
      EXPECT_EQ(integrate_oracle(s, m, {alpha, b, 0}),
                integrate_oracle(s, reduced, {alpha, b, 0}));
  }
}

TEST(DiagonalReduction, FailsAgainstPointWeights) {
  // The reduction is only claimed for pure alpha-bar weights.
  const SurfaceData s = p1xp1();
  const Mono m(2, {{MC::unit(2), 2}});
  const WeightSpec w{vec({1, 1}), 0, 1};
  EXPECT_NE(integrate_oracle(s, m, w), integrate_oracle(s, reduce_diagonal(m), w));
}

TEST(PtReduction, Identity) {
  const SurfaceData s = p1xp1();
  EXPECT_EQ(special_pt_reduction(s, vec({3, -1}), 2), 2);
  Rng rng(67);
  for (int d = 3; d <= 4; ++d) {
    const IntVector alpha = random_vector(rng, 2, 3);
    const Rational q = s.square(alpha);
    EXPECT_EQ(special_pt_reduction(s, alpha, d),
              Rational(4 * d - 6) * factorial(2 * d - 4) / pow2(d - 2) *
                  power(q, d - 2));
  }
  EXPECT_THROW(special_pt_reduction(s, vec({1, 1}), 1), Error);
}
