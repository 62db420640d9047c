#include <gtest/gtest.h>

#include <set>

#include "test_helpers.hpp"
#include "wallcross/hilbert_segre.hpp"
#include "wallcross/lattice_walls.hpp"
#include "wallcross/random_lattice.hpp"

using namespace wallcross;
using namespace wallcross::testing;

namespace {

const ChernData kChern{vec({1, 1}), 2};
const IntVector kHm = vec({1, 2});
const IntVector kHp = vec({2, 1});

// Every defining condition and derived field, recomputed from scratch.
void expect_valid_wall(const SurfaceData& s, const ChernData& chern,
                       const IntVector& hm, const IntVector& hp,
                       const WallClass& w) {
  const std::int64_t delta = 4 * chern.c2 - s.square(chern.c1);
  for (Eigen::Index i = 0; i < w.xi.size(); ++i)
    EXPECT_EQ((w.xi(i) - chern.c1(i)) % 2, 0);
  EXPECT_EQ(w.xi_sq, s.square(w.xi));
  EXPECT_LT(w.xi_sq, 0);
  EXPECT_GE(w.xi_sq, -delta);
  EXPECT_EQ((delta + w.xi_sq) % 4, 0);
  EXPECT_EQ(w.d * 4, delta + w.xi_sq);
  EXPECT_GE(w.d, 0);
  const std::int64_t a = s.pair(w.xi, hm);
  const std::int64_t b = s.pair(w.xi, hp);
  EXPECT_LT(a, 0);
  EXPECT_GT(b, 0);
  EXPECT_EQ(w.t0, Rational(a) / Rational(a - b));
  EXPECT_GT(w.t0, 0);
  EXPECT_LT(w.t0, 1);
  const std::int64_t xi_xi_minus_K = w.xi_sq - s.pair(w.xi, s.K());
  EXPECT_EQ(2 * w.e, -xi_xi_minus_K + 2 * w.d + 2);
  EXPECT_EQ(w.rk_minus, ext_rank(s, w.xi, w.d, 0, ExtSide::Minus));
  EXPECT_EQ(w.rk_plus, ext_rank(s, w.xi, 0, w.d, ExtSide::Plus));
  EXPECT_EQ(2 * w.d + w.rk_minus + w.rk_plus - 1, delta - 3);
  EXPECT_EQ(w.component_case, w.rk_minus == 0 || w.rk_plus == 0);
}

}  // namespace

TEST(Walls, P1xP1SingleWall) {
  const SurfaceData s = p1xp1();
  const auto walls = enumerate_separating_classes(s, kChern, kHm, kHp);
  ASSERT_EQ(walls.size(), 1u);
  const WallClass& w = walls[0];
  EXPECT_EQ(w.xi, vec({-1, 1}));
  EXPECT_EQ(w.xi_sq, -2);
  EXPECT_EQ(w.d, 1);
  EXPECT_EQ(w.e, 3);
  EXPECT_EQ(w.rk_minus, 1);
  EXPECT_EQ(w.rk_plus, 1);
  EXPECT_EQ(w.t0, Q(1, 2));
  EXPECT_EQ(w.goodness, Goodness::CertifiedGood);
  EXPECT_FALSE(w.component_case);
  expect_valid_wall(s, kChern, kHm, kHp, w);
}

TEST(Walls, P1xP1LowerC2GivesDZero) {
  const SurfaceData s = p1xp1();
  const auto walls =
      enumerate_separating_classes(s, ChernData{vec({1, 1}), 1}, kHm, kHp);
  ASSERT_EQ(walls.size(), 1u);
  EXPECT_EQ(walls[0].xi, vec({-1, 1}));
  EXPECT_EQ(walls[0].d, 0);
  EXPECT_TRUE(walls[0].component_case);
}

TEST(Walls, RankOneHasNoWalls) {
  const SurfaceData s(mat({{1}}), vec({-3}));
  for (std::int64_t c2 = -2; c2 < 6; ++c2)
    EXPECT_TRUE(enumerate_separating_classes(s, ChernData{vec({1}), c2},
                                             vec({1}), vec({2}))
                    .empty());
}

TEST(Walls, PolarizationChecks) {
  const SurfaceData s = p1xp1();
  EXPECT_THROW(enumerate_separating_classes(s, kChern, vec({1, 0}), kHp), Error);
  EXPECT_THROW(enumerate_separating_classes(s, kChern, kHm, vec({-2, -1})), Error);
  try {
    check_polarizations(s, vec({1, 0}), kHp);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidPolarization);
  }
  EXPECT_TRUE(enumerate_separating_classes(s, kChern, kHm, vec({2, 4})).empty());
}

TEST(Walls, MakeWallClassRejectsNonWalls) {
  const SurfaceData s = p1xp1();
  EXPECT_THROW(make_wall_class(s, kChern, vec({1, -1}), kHm, kHp), Error);
  EXPECT_THROW(make_wall_class(s, kChern, vec({0, 1}), kHm, kHp), Error);
  EXPECT_THROW(make_wall_class(s, kChern, vec({-1, 3}), kHm, kHp), Error);
}

TEST(Walls, Goodness) {
  const SurfaceData torsion = p1xp1({false, true});
  const auto w = make_wall_class(torsion, kChern, vec({-1, 1}), kHm, kHp);
  EXPECT_EQ(w.goodness, Goodness::CertifiedGood);
  // <K.H_t0> = 15/2 > 0 and no flags.
  const SurfaceData s(mat({{1, 0}, {0, -1}}), vec({3, 1}));
  const auto u = make_wall_class(s, ChernData{vec({1, 0}), 1}, vec({1, 2}),
                                 vec({3, 2}), vec({3, 1}));
  EXPECT_EQ(u.t0, Q(1, 2));
  EXPECT_EQ(u.goodness, Goodness::Unknown);
  const SurfaceData flagged(mat({{1, 0}, {0, -1}}), vec({3, 1}), 1, {true, false});
  EXPECT_EQ(certify_goodness(flagged, u, vec({3, 2}), vec({3, 1})),
            Goodness::CertifiedGood);
  EXPECT_STREQ(to_string(Goodness::CertifiedGood), "certified");
  EXPECT_STREQ(to_string(Goodness::Unknown), "unknown");
}

TEST(Miniwalls, P1xP1) {
  const SurfaceData s = p1xp1();
  const auto w = make_wall_class(s, kChern, vec({-1, 1}), kHm, kHp);
  const auto mini = enumerate_miniwalls(s, kChern, w, vec({10, -10}));
  ASSERT_EQ(mini.size(), 2u);
  EXPECT_EQ(mini[0].a, Q(19, 40));
  EXPECT_EQ(mini[0].n, 0);
  EXPECT_EQ(mini[0].m, 1);
  EXPECT_EQ(mini[1].a, Q(21, 40));
  EXPECT_EQ(mini[1].n, 1);
  EXPECT_EQ(mini[1].m, 0);
  // Both defining equations hold.
  for (const Miniwall& m : mini) {
    EXPECT_EQ(m.n + m.m, w.d);
    EXPECT_EQ(Rational(m.n - m.m),
              Rational(s.pair(w.xi, IntVector(kChern.c1 - s.K()))) / 2 +
                  (2 * m.a - 1) * Rational(s.pair(w.xi, vec({10, -10}))));
  }
}

TEST(Miniwalls, DZeroHasAtMostOne) {
  const SurfaceData s = p1xp1();
  const ChernData chern{vec({1, 1}), 1};
  const auto w = make_wall_class(s, chern, vec({-1, 1}), kHm, kHp);
  for (const IntVector& C : {vec({10, -10}), vec({1, 0}), vec({3, -1})})
    EXPECT_LE(enumerate_miniwalls(s, chern, w, C).size(), 1u);
  const auto one = enumerate_miniwalls(s, chern, w, vec({10, -10}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].a, Q(1, 2));
}

TEST(Miniwalls, DegenerateC) {
  const SurfaceData s = p1xp1();
  const auto w = make_wall_class(s, kChern, vec({-1, 1}), kHm, kHp);
  try {
    enumerate_miniwalls(s, kChern, w, vec({1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateC);
  }
  EXPECT_THROW(enumerate_miniwalls(s, kChern, w, vec({-10, 10})), Error);
}

TEST(FineCriterion, Examples) {
  const SurfaceData s = p1xp1();
  EXPECT_TRUE(check_fine_criterion(s, kChern).fine);
  const auto four = check_fine_criterion(s, ChernData{vec({0, 2}), 1});
  EXPECT_TRUE(four.fine);
  EXPECT_NE(four.message.find("not divisible by 8"), std::string::npos);
  EXPECT_FALSE(check_fine_criterion(s, ChernData{vec({0, 2}), 2}).fine);
}

TEST(Admissibility, WallMembership) {
  const SurfaceData s = p1xp1();
  EXPECT_TRUE(lies_on_wall(s, kChern, vec({1, 1})));
  EXPECT_FALSE(lies_on_wall(s, kChern, kHm));
  const auto report = check_admissibility(s, kChern, kHm, kHp);
  EXPECT_TRUE(report.h_minus_off_walls);
  EXPECT_TRUE(report.h_plus_off_walls);
  EXPECT_TRUE(report.clause3);
  EXPECT_NE(report.note.find("(2) and (4)"), std::string::npos);
  const auto even = check_admissibility(s, ChernData{vec({0, 2}), 1}, kHm, kHp);
  EXPECT_FALSE(even.clause3);  // N = 1 is not > 4/2
}

TEST(ShortVectors, MatchBruteForce) {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    const int n = static_cast<int>(uniform(rng, 1, 3));
    // A = B^T B + I is positive definite.
    IntMatrix B(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) B(i, j) = uniform(rng, -2, 2);
    const Matrix<Rational> A = to_rational_matrix(IntMatrix(
        B.transpose() * B + IntMatrix::Identity(n, n)));
    const Rational bound = Rational(uniform(rng, 0, 30)) / Rational(uniform(rng, 1, 3));
    std::set<std::vector<std::int64_t>> fast;
    for (const IntVector& x : enumerate_short_vectors(A, bound))
      fast.insert(std::vector<std::int64_t>(x.data(), x.data() + n));
    std::set<std::vector<std::int64_t>> brute;
    const int R = 30;
    IntVector x = IntVector::Constant(n, -R);
    while (true) {
      const Vector<Rational> xq = to_rational(x);
      if (Rational(xq.dot(A * xq)) <= bound)
        brute.insert(std::vector<std::int64_t>(x.data(), x.data() + n));
      int k = 0;
      while (k < n && x(k) == R) x(k++) = -R;
      if (k == n) break;
      ++x(k);
    }
    EXPECT_EQ(fast, brute);
  }
}

TEST(Walls, RandomEnumerationMatchesBoxAndInvariants) {
  Rng rng(17);
  for (int t = 0; t < 8; ++t) {
    const int b2 = static_cast<int>(uniform(rng, 2, 3));
    const auto p = random_enumeration_problem(rng, b2, b2 == 2 ? 20 : 8);
    const std::int64_t bound =
        coordinate_bound(p.surface, p.chern, p.h_minus, p.h_plus);
    const auto fast =
        enumerate_separating_classes(p.surface, p.chern, p.h_minus, p.h_plus);
    const auto box = enumerate_in_box(p.surface, p.chern, p.h_minus, p.h_plus,
                                      static_cast<int>(bound));
    ASSERT_EQ(fast.size(), box.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      EXPECT_EQ(fast[i].xi, box[i].xi);
      expect_valid_wall(p.surface, p.chern, p.h_minus, p.h_plus, fast[i]);
      EXPECT_LE(fast[i].xi.cwiseAbs().maxCoeff(), bound);
    }
    for (std::size_t i = 1; i < fast.size(); ++i)
      EXPECT_LE(fast[i - 1].t0, fast[i].t0);
  }
}

TEST(Walls, ReversalNegatesClasses) {
  Rng rng(23);
  for (int t = 0; t < 8; ++t) {
    const auto p = random_enumeration_problem(rng, 2, 20);
    const auto fwd =
        enumerate_separating_classes(p.surface, p.chern, p.h_minus, p.h_plus);
    const auto back =
        enumerate_separating_classes(p.surface, p.chern, p.h_plus, p.h_minus);
    ASSERT_EQ(fwd.size(), back.size());
    for (const WallClass& w : fwd) {
      auto it = std::find_if(back.begin(), back.end(), [&](const WallClass& v) {
        return v.xi == IntVector(-w.xi);
      });
      ASSERT_NE(it, back.end());
      EXPECT_EQ(it->d, w.d);
      EXPECT_EQ(it->rk_minus, w.rk_plus);
      EXPECT_EQ(it->rk_plus, w.rk_minus);
    }
  }
}

TEST(Walls, ThreadCountDoesNotChangeOutput) {
  Rng rng(29);
  for (int t = 0; t < 4; ++t) {
    const auto p = random_enumeration_problem(rng, 3, 10);
    const auto one = enumerate_separating_classes(p.surface, p.chern, p.h_minus,
                                                  p.h_plus, 1);
    const auto four = enumerate_separating_classes(p.surface, p.chern,
                                                   p.h_minus, p.h_plus, 4);
    ASSERT_EQ(one.size(), four.size());
    for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i].xi, four[i].xi);
  }
}

TEST(Walls, GroupingByDirection) {
  const SurfaceData s = p1xp1();
  const IntVector hm = vec({1, 4}), hp = vec({4, 1});
  const ChernData chern{vec({1, 1}), 6};  // delta = 22
  const auto walls = enumerate_separating_classes(s, chern, hm, hp);
  const auto groups = group_by_hyperplane(walls);
  std::size_t total = 0;
  for (const auto& g : groups) {
    total += g.size();
    for (const WallClass& w : g) EXPECT_EQ(w.t0, g.front().t0);
  }
  EXPECT_EQ(total, walls.size());
  EXPECT_LT(groups.size(), walls.size());  // (-1,1) and (-3,3) share a line
}
