#include "wallcross/delta_engine.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <ranges>

namespace wallcross {

namespace {

int parity_sign(std::int64_t n) { return n % 2 == 0 ? 1 : -1; }

// l! / ((l - 2d + 2k)! (d - k)!), or nullopt when an argument is negative.
std::optional<Rational> factorial_ratio(std::int64_t l, std::int64_t d,
                                        std::int64_t k) {
  const std::int64_t a = l - 2 * d + 2 * k;
  const std::int64_t b = d - k;
  if (a < 0 || b < 0) return std::nullopt;
  return factorial(static_cast<int>(l)) / factorial(static_cast<int>(a)) /
         factorial(static_cast<int>(b));
}

// Highest power of L first.
std::vector<WallTerm> merge(const std::map<int, Rational>& byL, std::int64_t l) {
  std::vector<WallTerm> out;
  for (const auto& [powL, coef] : byL | std::views::reverse)
    if (coef != 0)
      out.push_back({coef, powL, static_cast<int>((l - powL) / 2)});
  return out;
}

}  // namespace

Rational WallCrossingPolynomial::evaluate(const SurfaceData& s,
                                          const IntVector& alpha) const {
  s.check_length(alpha, "alpha");
  const Rational L = Rational(s.pair(xi, alpha)) / 2;
  const Rational q = Rational(s.square(alpha));
  Rational total = 0;
  for (const WallTerm& t : terms)
    total += t.coef * power(L, t.powL) * power(q, t.powQ);
  return total;
}

std::vector<WallTerm> leading_terms(std::int64_t l, std::int64_t r,
                                    std::int64_t d, std::int64_t e,
                                    std::int64_t Ksq, std::int64_t xisq) {
  if (l < 0 || r < 0 || d < 0)
    throw Error(ErrorKind::RangeError, "l, r and d must be nonnegative");
  std::map<int, Rational> byL;
  for (int c = 0; c <= 2; ++c) {
    const Rational outer = Rational(parity_sign(r - c + e)) /
                           pow2(static_cast<int>(2 * r - 3 * c)) *
                           binomial(static_cast<int>(r), c);
    if (outer == 0) continue;
    for (int k = c; k <= 2; ++k) {
      const auto ratio = factorial_ratio(l, d, k);
      if (!ratio) continue;
      const Rational Q = q_mc<Rational>(k - c, c, Rational(l), Rational(d),
                                        Rational(Ksq), Rational(xisq));
      byL[static_cast<int>(l - 2 * d + 2 * k)] += outer * *ratio * Q;
    }
  }
  return merge(byL, l);
}

std::vector<WallTerm> leading_terms_top(std::int64_t N, std::int64_t d,
                                        std::int64_t e, std::int64_t Ksq) {
  if (N < 0 || d < 0)
    throw Error(ErrorKind::RangeError, "N and d must be nonnegative");
  const auto Q = q_polys<Rational>(Rational(N), Rational(d), Rational(Ksq));
  std::map<int, Rational> byL;
  for (int k = 0; k <= 2; ++k) {
    const auto ratio = factorial_ratio(N, d, k);
    if (!ratio) continue;
    byL[static_cast<int>(N - 2 * d + 2 * k)] +=
        Rational(parity_sign(e)) * *ratio * Q[k];
  }
  return merge(byL, N);
}

void check_weight(const SurfaceData& s, const ChernData& chern, std::int64_t l,
                  std::int64_t r) {
  const std::int64_t N = chern.expected_dimension(s);
  if (l < 0 || r < 0 || l + 2 * r != N)
    throw Error(ErrorKind::WeightMismatch,
                "l + 2r = " + std::to_string(l + 2 * r) + " but N = " +
                    std::to_string(N));
}

WallCrossingPolynomial delta_leading(const SurfaceData& s,
                                     const ChernData& chern,
                                     const WallClass& wall, std::int64_t l,
                                     std::int64_t r) {
  check_weight(s, chern, l, r);
  WallCrossingPolynomial p;
  p.xi = wall.xi;
  p.l = static_cast<int>(l);
  p.terms = leading_terms(l, r, wall.d, wall.e, s.K_sq(), wall.xi_sq);
  p.modulus_exponent = chern.expected_dimension(s) - 2 * wall.d + 6;
  p.exact = wall.d <= 2;
  return p;
}

Rational delta_exact_small_d(const SurfaceData& s, const ChernData& chern,
                             const WallClass& wall, std::int64_t l,
                             std::int64_t r, const IntVector& alpha,
                             const OracleCaps& caps) {
  check_weight(s, chern, l, r);
  if (wall.d >= 3)
    throw Error(ErrorKind::DTooLarge,
                "exact evaluation needs d <= 2, got d = " +
                    std::to_string(wall.d));
  s.check_length(alpha, "alpha");
  const int d = static_cast<int>(wall.d);
  const std::int64_t N = chern.expected_dimension(s);
  const SymClass<Rational> R = R_class(s, wall.xi, d);
  const Rational xa = Rational(s.pair(wall.xi, alpha));
  Rational total = 0;
  for (std::int64_t c = 0; c <= r; ++c) {
    for (std::int64_t b = 0; b <= l; ++b) {
      // R_d has degree <= 4d, so only b + 2c <= 2d contributes.
      if (b + 2 * c > 2 * d) break;
      if (xa == 0 && b < l) continue;
      const Rational integral =
          integrate_oracle(s, R, {alpha, static_cast<int>(b), static_cast<int>(c)},
                           caps) /
          factorial(d);
      if (integral == 0) continue;
      total += Rational(parity_sign(r - c + wall.e)) *
               pow2(static_cast<int>(b + 2 * c - N)) *
               binomial(static_cast<int>(l), static_cast<int>(b)) *
               binomial(static_cast<int>(r), static_cast<int>(c)) *
               power(xa, static_cast<int>(l - b)) * integral;
    }
  }
  return total;
}

TotalEvaluation TotalChange::evaluate(const SurfaceData& s,
                                      const IntVector& alpha) const {
  TotalEvaluation out;
  bool all_exact = true;
  Rational sum = 0;
  for (const WallContribution& w : walls) {
    WallEvaluation ev;
    ev.xi = w.wall.xi;
    ev.value = w.delta.evaluate(s, alpha);
    ev.label = w.delta.exact ? "exact" : "leading-order";
    ev.uncertified = w.wall.goodness != Goodness::CertifiedGood;
    all_exact = all_exact && w.delta.exact;
    sum += ev.value;
    out.walls.push_back(std::move(ev));
  }
  out.total = Rational(n2) * sum;
  out.label = all_exact ? "exact" : "leading-order";
  return out;
}

TotalChange total_change(const SurfaceData& s, const ChernData& chern,
                         const IntVector& h_minus, const IntVector& h_plus,
                         std::int64_t l, std::int64_t r, unsigned threads) {
  check_weight(s, chern, l, r);
  const std::vector<WallClass> walls =
      enumerate_separating_classes(s, chern, h_minus, h_plus, threads);
  TotalChange out;
  out.n2 = s.n2();
  out.walls.resize(walls.size());
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      out.walls[i] = {walls[i], delta_leading(s, chern, walls[i], l, r)};
  };
  threads = std::max(1u, threads);
  if (threads == 1 || walls.size() < 2) {
    fill(0, walls.size());
  } else {
    std::vector<std::future<void>> parts;
    const std::size_t chunk = (walls.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < walls.size(); begin += chunk)
      parts.push_back(std::async(std::launch::async, fill, begin,
                                 std::min(walls.size(), begin + chunk)));
    for (auto& part : parts) part.get();
  }
  return out;
}

int donaldson_sign(const SurfaceData& s, const ChernData& chern) {
  s.check_length(chern.c1, "c1");
  return parity_sign(s.square(chern.c1) + s.pair(chern.c1, s.K()));
}

}  // namespace wallcross
