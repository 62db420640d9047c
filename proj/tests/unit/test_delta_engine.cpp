#include <gtest/gtest.h>

#include "test_helpers.hpp"
#include "wallcross/delta_engine.hpp"
#include "wallcross/random_lattice.hpp"

using namespace wallcross;
using namespace wallcross::testing;

namespace {

using P = Polynomial;

const ChernData kChern{vec({1, 1}), 2};
const IntVector kHm = vec({1, 2});
const IntVector kHp = vec({2, 1});

WallClass p1xp1_wall() {
  return make_wall_class(p1xp1(), kChern, vec({-1, 1}), kHm, kHp);
}

Rational R(long v) { return Rational(v); }

}  // namespace

TEST(Polys, PrintedValues) {
  const auto p = p_polys(R(3), R(1), R(8), R(-2));
  EXPECT_EQ(p[0], 1);
  EXPECT_EQ(p[1], 28);
  const auto q = q_polys(R(3), R(1), R(8));
  EXPECT_EQ(q[0], 1);
  EXPECT_EQ(q[1], 28);
  EXPECT_EQ(q[2], 438);
}

TEST(Polys, PToQSubstitution) {
  const P N = P::variable("N"), d = P::variable("d"), K2 = P::variable("K2");
  const auto p = p_polys(N, d, K2, P(4) * d - N - P(3));
  const auto q = q_polys(N, d, K2);
  for (int k = 0; k <= 2; ++k) EXPECT_EQ(p[k], q[k]) << k;
  EXPECT_EQ(q[1], P(2) * N + P(2) * K2 - P(2) * d + P(8));
}

TEST(Polys, QmcExpansions) {
  const P l = P::variable("l"), r = P::variable("r"), d = P::variable("d"),
          K2 = P::variable("K2");
  const P X = P(4) * d - P(2) * r - l - P(3);
  for (int c = 0; c <= 2; ++c) EXPECT_EQ(q_mc(0, c, l, d, K2, X), P(1));
  EXPECT_EQ(q_mc(1, 0, l, d, K2, X),
            P(2) * l - P(2) * d - P(12) * r + P(2) * K2 + P(8));
  EXPECT_EQ(q_mc(1, 1, l, d, K2, X),
            P(2) * l - P(2) * d - P(12) * r + P(2) * K2 + P(29));
  EXPECT_EQ(q_mc(2, 0, l, d, K2, X),
            P(72) * r * r - P(24) * r * l + P(24) * d * r - P(24) * K2 * r +
                P(2) * l * l - P(4) * d * l + P(4) * K2 * l + P(2) * d * d -
                P(4) * d * K2 + P(2) * K2 * K2 - P(198) * r + P(21) * l -
                P(18) * d + P(18) * K2 + P(49));
  try {
    q_mc(2, 1, R(0), R(0), R(0), R(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RangeError);
  }
  EXPECT_THROW(q_mc(-1, 0, R(0), R(0), R(0), R(0)), Error);
}

TEST(Leading, P1xP1) {
  const SurfaceData s = p1xp1();
  const auto poly = delta_leading(s, kChern, p1xp1_wall(), 3, 0);
  ASSERT_EQ(poly.terms.size(), 2u);
  EXPECT_EQ(poly.terms[0], (WallTerm{R(-28), 3, 0}));
  EXPECT_EQ(poly.terms[1], (WallTerm{R(-6), 1, 1}));
  EXPECT_TRUE(poly.exact);
  EXPECT_EQ(poly.modulus_exponent, 3 - 2 + 6);
  EXPECT_EQ(poly.evaluate(s, vec({1, 0})), Q(-7, 2));
  EXPECT_EQ(poly.evaluate(s, vec({1, 1})), 0);
}

TEST(Leading, WeightMismatch) {
  const SurfaceData s = p1xp1();
  try {
    delta_leading(s, kChern, p1xp1_wall(), 2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WeightMismatch);
  }
  EXPECT_THROW(delta_exact_small_d(s, kChern, p1xp1_wall(), 1, 0, vec({1, 0})),
               Error);
}

TEST(Leading, VanishesWhenEveryFactorialArgumentIsNegative) {
  EXPECT_TRUE(leading_terms(1, 0, 5, 0, 8, -2).empty());
  EXPECT_TRUE(leading_terms(1, 3, 4, 1, 3, -5).empty());
}

TEST(Leading, Homogeneity) {
  Rng rng(79);
  for (int t = 0; t < 200; ++t) {
    const std::int64_t l = uniform(rng, 0, 20), r = uniform(rng, 0, 6);
    for (const WallTerm& term :
         leading_terms(l, r, uniform(rng, 0, 8), uniform(rng, -5, 5),
                       uniform(rng, -9, 9), uniform(rng, -20, -1)))
      EXPECT_EQ(term.powL + 2 * term.powQ, l);
  }
}

TEST(Leading, TopTermSign) {
  Rng rng(83);
  for (int t = 0; t < 50; ++t) {
    const std::int64_t d = uniform(rng, 0, 5);
    const std::int64_t N = 2 * d + uniform(rng, 0, 10);
    const std::int64_t e = uniform(rng, -5, 5);
    const auto terms = leading_terms(N, 0, d, e, uniform(rng, -9, 9), 4 * d - N - 3);
    ASSERT_FALSE(terms.empty());
    const WallTerm& lowest = terms.back();
    EXPECT_EQ(lowest.powL, N - 2 * d);
    EXPECT_EQ(lowest.coef, Rational(e % 2 == 0 ? 1 : -1) * factorial(N) /
                               factorial(N - 2 * d) / factorial(d));
  }
}

TEST(Leading, RZeroMatchesTopForm) {
  Rng rng(89);
  for (int t = 0; t < 30; ++t) {
    const std::int64_t N = uniform(rng, 0, 30), d = uniform(rng, 0, 8);
    const std::int64_t Ksq = uniform(rng, -10, 10), e = uniform(rng, -5, 5);
    EXPECT_EQ(leading_terms(N, 0, d, e, Ksq, 4 * d - N - 3),
              leading_terms_top(N, d, e, Ksq));
  }
}

TEST(Exact, P1xP1) {
  const SurfaceData s = p1xp1();
  const WallClass w = p1xp1_wall();
  EXPECT_EQ(delta_exact_small_d(s, kChern, w, 3, 0, vec({1, 0})), Q(-7, 2));
  EXPECT_EQ(delta_exact_small_d(s, kChern, w, 3, 0, vec({1, 1})), 0);
  const auto poly = delta_leading(s, kChern, w, 1, 1);
  Rng rng(97);
  for (int t = 0; t < 20; ++t) {
    const IntVector alpha = random_vector(rng, 2, 4);
    EXPECT_EQ(delta_exact_small_d(s, kChern, w, 1, 1, alpha),
              poly.evaluate(s, alpha));
  }
}

TEST(Exact, RandomSmallWalls) {
  Rng rng(101);
  for (int t = 0; t < 6; ++t) {
    const WallProblem p = random_wall_problem(
        rng, static_cast<int>(uniform(rng, 2, 3)), uniform(rng, 0, 2));
    const std::int64_t N = p.chern.expected_dimension(p.surface);
    for (std::int64_t r = 0; 2 * r <= N && r <= 2; ++r) {
      const auto poly = delta_leading(p.surface, p.chern, p.wall, N - 2 * r, r);
      for (int a = 0; a < 5; ++a) {
        const IntVector alpha = random_vector(rng, p.surface.b2(), 3);
        EXPECT_EQ(delta_exact_small_d(p.surface, p.chern, p.wall, N - 2 * r, r,
                                      alpha),
                  poly.evaluate(p.surface, alpha));
      }
    }
  }
}

TEST(Exact, RejectsLargeD) {
  Rng rng(103);
  const WallProblem p = random_wall_problem(rng, 2, 3);
  const std::int64_t N = p.chern.expected_dimension(p.surface);
  try {
    delta_exact_small_d(p.surface, p.chern, p.wall, N, 0, vec({1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DTooLarge);
  }
  EXPECT_FALSE(delta_leading(p.surface, p.chern, p.wall, N, 0).exact);
}

TEST(Total, P1xP1) {
  const SurfaceData s = p1xp1();
  const TotalChange total = total_change(s, kChern, kHm, kHp, 3, 0);
  EXPECT_EQ(total.n2, 1);
  ASSERT_EQ(total.walls.size(), 1u);
  const auto ev = total.evaluate(s, vec({1, 0}));
  EXPECT_EQ(ev.total, Q(-7, 2));
  EXPECT_EQ(ev.label, "exact");
  ASSERT_EQ(ev.walls.size(), 1u);
  EXPECT_FALSE(ev.walls[0].uncertified);
  const SurfaceData two(mat({{0, 1}, {1, 0}}), vec({-2, -2}), 2);
  EXPECT_EQ(total_change(two, kChern, kHm, kHp, 3, 0).evaluate(two, vec({1, 0})).total,
            -7);
}

TEST(Total, NoWalls) {
  const SurfaceData s(mat({{1}}), vec({-3}));
  const ChernData chern{vec({1}), 3};  // N = 8
  const auto total = total_change(s, chern, vec({1}), vec({2}), 8, 0);
  EXPECT_TRUE(total.walls.empty());
  EXPECT_EQ(total.evaluate(s, vec({1})).total, 0);
}

TEST(Total, SwappedPolarizationsNegate) {
  Rng rng(107);
  int nonzero = 0;
  for (int t = 0; t < 8; ++t) {
    const auto p = random_enumeration_problem(rng, 2, 20);
    const std::int64_t N = p.chern.expected_dimension(p.surface);
    if (N < 0) continue;
    for (std::int64_t r = 0; 2 * r <= N && r <= 2; ++r) {
      const auto fwd = total_change(p.surface, p.chern, p.h_minus, p.h_plus, N - 2 * r, r);
      const auto back = total_change(p.surface, p.chern, p.h_plus, p.h_minus, N - 2 * r, r);
      const IntVector alpha = random_vector(rng, 2, 3);
      const Rational a = fwd.evaluate(p.surface, alpha).total;
      EXPECT_EQ(a, -back.evaluate(p.surface, alpha).total);
      if (a != 0) ++nonzero;
    }
  }
  EXPECT_GT(nonzero, 0);
}

TEST(Total, ThreadsDoNotChangeResult) {
  Rng rng(109);
  const auto p = random_enumeration_problem(rng, 3, 10);
  const std::int64_t N = std::max<std::int64_t>(0, p.chern.expected_dimension(p.surface));
  if (p.chern.expected_dimension(p.surface) < 0) GTEST_SKIP();
  const auto a = total_change(p.surface, p.chern, p.h_minus, p.h_plus, N, 0, 1);
  const auto b = total_change(p.surface, p.chern, p.h_minus, p.h_plus, N, 0, 3);
  ASSERT_EQ(a.walls.size(), b.walls.size());
  for (std::size_t i = 0; i < a.walls.size(); ++i)
    EXPECT_EQ(a.walls[i].delta.terms, b.walls[i].delta.terms);
}

TEST(Sign, Examples) {
  EXPECT_EQ(donaldson_sign(p1xp1(), kChern), 1);
  EXPECT_EQ(donaldson_sign(p1xp1(), ChernData{vec({0, 0}), 1}), 1);
  const SurfaceData p2(mat({{1}}), vec({-3}));
  EXPECT_EQ(donaldson_sign(p2, ChernData{vec({1}), 1}), 1);
}
