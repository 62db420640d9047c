#include "wallcross/lattice_walls.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>

namespace wallcross {

const char* to_string(Goodness g) {
  return g == Goodness::CertifiedGood ? "certified" : "unknown";
}

namespace {

bool congruent_mod2(const IntVector& a, const IntVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (((a(i) - b(i)) % 2) != 0) return false;
  return true;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

Integer floor_of(const Rational& r) {
  Integer q = boost::multiprecision::numerator(r) /
              boost::multiprecision::denominator(r);  // truncates toward 0
  if (r < 0 && Rational(q) != r) q -= 1;
  return q;
}

// Defining conditions of a separating class; reason is filled on failure.
bool is_separating_class(const SurfaceData& s, const ChernData& chern,
                         const IntVector& xi, const IntVector& h_minus,
                         const IntVector& h_plus, std::string* reason) {
  auto fail = [&](const char* why) {
    if (reason) *reason = why;
    return false;
  };
  if (!congruent_mod2(xi, chern.c1)) return fail("xi + c1 is not divisible by 2");
  const std::int64_t sq = s.square(xi);
  if (sq >= 0) return fail("xi^2 is not negative");
  if (sq < -chern.discriminant(s)) return fail("xi^2 < c1^2 - 4 c2");
  if (s.pair(xi, h_minus) >= 0) return fail("<xi.H_-> is not negative");
  if (s.pair(xi, h_plus) <= 0) return fail("<xi.H_+> is not positive");
  return true;
}

void sort_walls(std::vector<WallClass>& walls) {
  std::sort(walls.begin(), walls.end(),
            [](const WallClass& a, const WallClass& b) {
              if (a.t0 != b.t0) return a.t0 < b.t0;
              return lex_less(a.xi, b.xi);
            });
}

// Positive definite form whose values bound every separating class, and the
// bound itself. Returns false when no class can exist.
bool separating_form(const SurfaceData& s, const ChernData& chern,
                     const IntVector& h_minus, const IntVector& h_plus,
                     Matrix<Rational>* form, Rational* bound) {
  const std::int64_t delta = chern.discriminant(s);
  if (delta <= 0 || s.b2() < 2) return false;
  const std::int64_t p = s.square(h_minus);
  const std::int64_t q = s.square(h_plus);
  const std::int64_t m = s.pair(h_minus, h_plus);
  if (m * m - p * q <= 0) return false;  // proportional polarizations
  const Vector<Rational> hm = to_rational(IntVector(s.gram() * h_minus));
  const Vector<Rational> hp = to_rational(IntVector(s.gram() * h_plus));
  *form = hm * hm.transpose() / Rational(p) + hp * hp.transpose() / Rational(q) -
          Rational(2) * s.gram_rational();
  *bound = Rational(2 * delta) * Rational(m) * Rational(m) /
           (Rational(p) * Rational(q));
  return true;
}

}  // namespace

void check_polarizations(const SurfaceData& s, const IntVector& h_minus,
                         const IntVector& h_plus) {
  s.check_length(h_minus, "H_minus");
  s.check_length(h_plus, "H_plus");
  if (s.square(h_minus) <= 0)
    throw Error(ErrorKind::InvalidPolarization, "H_minus^2 must be positive");
  if (s.square(h_plus) <= 0)
    throw Error(ErrorKind::InvalidPolarization, "H_plus^2 must be positive");
  if (s.pair(h_minus, h_plus) <= 0)
    throw Error(ErrorKind::InvalidPolarization,
                "<H_minus.H_plus> must be positive");
}

WallClass make_wall_class(const SurfaceData& s, const ChernData& chern,
                          const IntVector& xi, const IntVector& h_minus,
                          const IntVector& h_plus) {
  s.check_length(xi, "xi");
  s.check_length(chern.c1, "c1");
  std::string reason;
  if (!is_separating_class(s, chern, xi, h_minus, h_plus, &reason))
    throw Error(ErrorKind::RangeError,
                to_string(xi) + " does not define a separating wall: " + reason);
  WallClass w;
  w.xi = xi;
  w.xi_sq = s.square(xi);
  w.d = (chern.discriminant(s) + w.xi_sq) / 4;
  const std::int64_t xi_K = s.pair(xi, s.K());
  // xi^2 = xi.K mod 2 because K is characteristic.
  const std::int64_t half_minus = (w.xi_sq - xi_K) / 2;  // <xi.(xi-K)>/2
  const std::int64_t half_plus = (w.xi_sq + xi_K) / 2;   // <xi.(xi+K)>/2
  w.e = -half_minus + w.d + 1;
  w.rk_minus = -half_minus + w.d - 1;
  w.rk_plus = -half_plus + w.d - 1;
  const std::int64_t a = s.pair(xi, h_minus);
  const std::int64_t b = s.pair(xi, h_plus);
  w.t0 = Rational(a) / Rational(a - b);
  w.component_case = w.rk_minus == 0 || w.rk_plus == 0;
  w.goodness = certify_goodness(s, w, h_minus, h_plus);
  return w;
}

std::vector<IntVector> enumerate_short_vectors(const Matrix<Rational>& form,
                                               const Rational& bound) {
  const int n = static_cast<int>(form.rows());
  // form(x) = sum_i diag_i (x_i + sum_{j>i} mu(i, j) x_j)^2
  Matrix<Rational> q = form;
  for (int i = 0; i < n; ++i) {
    if (q(i, i) <= 0)
      throw Error(ErrorKind::RangeError, "form is not positive definite");
    for (int j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) = q(i, j) / q(i, i);
    }
    for (int k = i + 1; k < n; ++k)
      for (int l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  std::vector<IntVector> out;
  if (bound < 0) return out;
  IntVector x = IntVector::Zero(n);
  std::vector<Rational> budget(n + 1);
  budget[n] = bound;
  // Depth-first from the last coordinate.
  auto walk = [&](auto&& self, int i) -> void {
    if (i < 0) {
      out.push_back(x);
      return;
    }
    Rational center = 0;
    for (int j = i + 1; j < n; ++j) center += q(i, j) * Rational(x(j));
    const Rational radius_sq = budget[i + 1] / q(i, i);
    const double r = std::sqrt(std::max(0.0, radius_sq.convert_to<double>()));
    const double c = center.convert_to<double>();
    const auto lo = static_cast<std::int64_t>(std::floor(-c - r)) - 1;
    const auto hi = static_cast<std::int64_t>(std::ceil(-c + r)) + 1;
    for (std::int64_t v = lo; v <= hi; ++v) {
      const Rational shifted = Rational(v) + center;
      const Rational used = q(i, i) * shifted * shifted;
      if (used > budget[i + 1]) continue;
      budget[i] = budget[i + 1] - used;
      x(i) = v;
      self(self, i - 1);
    }
    x(i) = 0;
  };
  walk(walk, n - 1);
  return out;
}

std::vector<WallClass> enumerate_separating_classes(const SurfaceData& s,
                                                    const ChernData& chern,
                                                    const IntVector& h_minus,
                                                    const IntVector& h_plus,
                                                    unsigned threads) {
  check_polarizations(s, h_minus, h_plus);
  s.check_length(chern.c1, "c1");
  Matrix<Rational> form;
  Rational bound;
  if (!separating_form(s, chern, h_minus, h_plus, &form, &bound)) return {};
  const std::vector<IntVector> candidates = enumerate_short_vectors(form, bound);

  auto test_range = [&](std::size_t begin, std::size_t end) {
    std::vector<WallClass> found;
    for (std::size_t i = begin; i < end; ++i)
      if (is_separating_class(s, chern, candidates[i], h_minus, h_plus, nullptr))
        found.push_back(make_wall_class(s, chern, candidates[i], h_minus, h_plus));
    return found;
  };
  std::vector<WallClass> walls;
  threads = std::max(1u, threads);
  if (threads == 1 || candidates.size() < 2 * threads) {
    walls = test_range(0, candidates.size());
  } else {
    std::vector<std::future<std::vector<WallClass>>> parts;
    const std::size_t chunk = (candidates.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < candidates.size(); begin += chunk)
      parts.push_back(std::async(std::launch::async, test_range, begin,
                                 std::min(candidates.size(), begin + chunk)));
    for (auto& part : parts) {
      auto found = part.get();
      walls.insert(walls.end(), found.begin(), found.end());
    }
  }
  sort_walls(walls);
  return walls;
}

std::vector<WallClass> enumerate_in_box(const SurfaceData& s,
                                        const ChernData& chern,
                                        const IntVector& h_minus,
                                        const IntVector& h_plus, int radius) {
  check_polarizations(s, h_minus, h_plus);
  const int n = s.b2();
  std::vector<WallClass> walls;
  IntVector x = IntVector::Constant(n, -radius);
  while (true) {
    if (is_separating_class(s, chern, x, h_minus, h_plus, nullptr))
      walls.push_back(make_wall_class(s, chern, x, h_minus, h_plus));
    int k = 0;
    while (k < n && x(k) == radius) x(k++) = -radius;
    if (k == n) break;
    ++x(k);
  }
  sort_walls(walls);
  return walls;
}

std::int64_t coordinate_bound(const SurfaceData& s, const ChernData& chern,
                              const IntVector& h_minus,
                              const IntVector& h_plus) {
  Matrix<Rational> form;
  Rational bound;
  if (!separating_form(s, chern, h_minus, h_plus, &form, &bound)) return -1;
  // max |x_i| subject to x^T A x <= B is sqrt(B (A^{-1})_ii).
  const Matrix<Rational> inv = inverse(form);
  std::int64_t best = 0;
  for (Eigen::Index i = 0; i < inv.rows(); ++i) {
    const Integer v = floor_of(bound * inv(i, i));
    const Integer root = boost::multiprecision::sqrt(v);
    best = std::max(best, root.convert_to<std::int64_t>());
  }
  return best;
}

Goodness certify_goodness(const SurfaceData& s, const WallClass& wall,
                          const IntVector& h_minus, const IntVector& h_plus) {
  if (s.flags().minus_K_effective || s.flags().K_torsion)
    return Goodness::CertifiedGood;
  // H_t0 = (1 - t0) H_- + t0 H_+ is ample and lies on the wall.
  const Rational k_dot = (Rational(1) - wall.t0) * Rational(s.pair(s.K(), h_minus)) +
                         wall.t0 * Rational(s.pair(s.K(), h_plus));
  return k_dot <= 0 ? Goodness::CertifiedGood : Goodness::Unknown;
}

std::vector<Miniwall> enumerate_miniwalls(const SurfaceData& s,
                                          const ChernData& chern,
                                          const WallClass& wall,
                                          const IntVector& C) {
  s.check_length(C, "C");
  const std::int64_t xi_C = s.pair(wall.xi, C);
  if (xi_C <= 0)
    throw Error(ErrorKind::DegenerateC,
                "<xi.C> = " + std::to_string(xi_C) + " must be positive");
  const Rational half_shift =
      Rational(s.pair(wall.xi, IntVector(chern.c1 - s.K()))) / 2;
  std::vector<Miniwall> out;
  for (std::int64_t n = 0; n <= wall.d; ++n) {
    const std::int64_t m = wall.d - n;
    // n - m = <xi.(c1 - K)>/2 + (2a - 1) <xi.C>
    const Rational a =
        ((Rational(n - m) - half_shift) / Rational(xi_C) + 1) / 2;
    if (a >= 0 && a <= 1) out.push_back({a, n, m});
  }
  std::sort(out.begin(), out.end(),
            [](const Miniwall& x, const Miniwall& y) { return x.a < y.a; });
  return out;
}

FineCriterion check_fine_criterion(const SurfaceData& s,
                                   const ChernData& chern) {
  s.check_length(chern.c1, "c1");
  for (Eigen::Index i = 0; i < chern.c1.size(); ++i)
    if (chern.c1(i) % 2 != 0)
      return {true, "c1 is not divisible by 2"};
  const std::int64_t delta = chern.discriminant(s);
  if (delta % 8 != 0)
    return {true, "c1 is divisible by 2 and 4c2 - c1^2 = " +
                      std::to_string(delta) + " is not divisible by 8"};
  return {false, "c1 is divisible by 2 and 4c2 - c1^2 = " +
                     std::to_string(delta) +
                     " is divisible by 8; universal family not guaranteed"};
}

bool lies_on_wall(const SurfaceData& s, const ChernData& chern,
                  const IntVector& h) {
  s.check_length(h, "H");
  const std::int64_t delta = chern.discriminant(s);
  const std::int64_t p = s.square(h);
  if (delta <= 0 || s.b2() < 2 || p <= 0) return false;
  // On h^perp the form -x^2 is positive definite; 2<x.h>^2/p - x^2 extends it.
  const Vector<Rational> hv = to_rational(IntVector(s.gram() * h));
  const Matrix<Rational> form =
      Rational(2) * hv * hv.transpose() / Rational(p) - s.gram_rational();
  for (const IntVector& x : enumerate_short_vectors(form, Rational(delta))) {
    if (s.pair(x, h) != 0 || !congruent_mod2(x, chern.c1)) continue;
    const std::int64_t sq = s.square(x);
    if (sq < 0 && sq >= -delta) return true;
  }
  return false;
}

AdmissibilityReport check_admissibility(const SurfaceData& s,
                                        const ChernData& chern,
                                        const IntVector& h_minus,
                                        const IntVector& h_plus) {
  AdmissibilityReport report;
  report.h_minus_off_walls = !lies_on_wall(s, chern, h_minus);
  report.h_plus_off_walls = !lies_on_wall(s, chern, h_plus);
  bool c1_even = true;
  for (Eigen::Index i = 0; i < chern.c1.size(); ++i)
    if (chern.c1(i) % 2 != 0) c1_even = false;
  const std::int64_t delta = chern.discriminant(s);
  // N > delta / 2  <=>  2 (delta - 3) > delta
  report.clause3 = !c1_even || 2 * (delta - 3) > delta;
  report.note =
      "admissibility clauses (1) and (3) checked; clauses (2) and (4) concern "
      "moduli-space dimensions and are not decidable from lattice data";
  return report;
}

std::vector<std::vector<WallClass>> group_by_hyperplane(
    const std::vector<WallClass>& walls) {
  std::vector<std::pair<IntVector, std::vector<WallClass>>> groups;
  for (const WallClass& w : walls) {
    std::int64_t g = 0;
    for (Eigen::Index i = 0; i < w.xi.size(); ++i) g = std::gcd(g, w.xi(i));
    const IntVector dir = w.xi / std::max<std::int64_t>(g, 1);
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& grp) { return grp.first == dir; });
    if (it == groups.end())
      groups.emplace_back(dir, std::vector<WallClass>{w});
    else
      it->second.push_back(w);
  }
  std::vector<std::vector<WallClass>> out;
  for (auto& [dir, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace wallcross
