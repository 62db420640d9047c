#include "wallcross/random_lattice.hpp"

namespace wallcross {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

IntVector random_vector(Rng& rng, int n, std::int64_t radius) {
  IntVector v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform(rng, -radius, radius);
  return v;
}

IntMatrix random_unimodular(Rng& rng, int n, int steps) {
  IntMatrix u = IntMatrix::Identity(n, n);
  if (n < 2) return u;
  for (int k = 0; k < steps; ++k) {
    const int i = static_cast<int>(uniform(rng, 0, n - 1));
    int j = static_cast<int>(uniform(rng, 0, n - 2));
    if (j >= i) ++j;
    u.row(i) += uniform(rng, 0, 1) ? u.row(j) : IntMatrix(-u.row(j));
  }
  return u;
}

SurfaceData random_surface(Rng& rng, int b2) {
  IntMatrix diag = IntMatrix::Zero(b2, b2);
  diag(0, 0) = uniform(rng, 1, 3);
  for (int i = 1; i < b2; ++i) diag(i, i) = -uniform(rng, 1, 3);
  const IntMatrix u = random_unimodular(rng, b2);
  const IntMatrix gram = u.transpose() * diag * u;
  // A characteristic class (gram K = diag(gram) mod 2) always exists; every
  // parity class is represented in the sampling box.
  const IntVector parity = gram.diagonal();
  for (int attempt = 0;; ++attempt) {
    IntVector K = random_vector(rng, b2, 3);
    const IntVector dots = gram * K;
    bool ok = true;
    for (int i = 0; i < b2; ++i) ok = ok && ((dots(i) - parity(i)) % 2 == 0);
    if (ok) return SurfaceData(gram, K);
    if (attempt > 100000) throw Error(ErrorKind::RangeError, "no characteristic K found");
  }
}

std::vector<IntVector> positive_cone_vectors(const SurfaceData& s,
                                             std::int64_t radius) {
  const int n = s.b2();
  std::vector<IntVector> out;
  IntVector reference;
  IntVector x = IntVector::Constant(n, -radius);
  while (true) {
    if (s.square(x) > 0) {
      if (reference.size() == 0) reference = x;
      if (s.pair(x, reference) > 0) out.push_back(x);
    }
    int k = 0;
    while (k < n && x(k) == radius) x(k++) = -radius;
    if (k == n) break;
    ++x(k);
  }
  return out;
}

WallProblem random_wall_problem(Rng& rng, int b2, std::int64_t d) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    SurfaceData s = random_surface(rng, b2);
    const IntVector xi = random_vector(rng, b2, 2);
    const std::int64_t xi_sq = s.square(xi);
    if (xi_sq >= 0 || 4 * d - xi_sq - 3 < 0) continue;  // need N >= 0
    std::vector<IntVector> minus, plus;
    for (const IntVector& h : positive_cone_vectors(s, 3)) {
      const std::int64_t p = s.pair(xi, h);
      if (p < 0) minus.push_back(h);
      if (p > 0) plus.push_back(h);
    }
    if (minus.empty() || plus.empty()) continue;
    const IntVector hm = minus[uniform(rng, 0, minus.size() - 1)];
    const IntVector hp = plus[uniform(rng, 0, plus.size() - 1)];
    ChernData chern;
    chern.c1 = xi + 2 * random_vector(rng, b2, 1);
    // 4 c2 = 4 d - xi^2 + c1^2, divisible by 4 since c1 = xi mod 2.
    chern.c2 = (4 * d - xi_sq + s.square(chern.c1)) / 4;
    WallClass wall = make_wall_class(s, chern, xi, hm, hp);
    return {std::move(s), chern, hm, hp, std::move(wall)};
  }
  throw Error(ErrorKind::RangeError, "could not generate a wall problem");
}

EnumerationProblem random_enumeration_problem(Rng& rng, int b2,
                                              std::int64_t max_coord) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    SurfaceData s = random_surface(rng, b2);
    const std::vector<IntVector> cone = positive_cone_vectors(s, 3);
    if (cone.size() < 2) continue;
    const IntVector hm = cone[uniform(rng, 0, cone.size() - 1)];
    const IntVector hp = cone[uniform(rng, 0, cone.size() - 1)];
    const std::int64_t m = s.pair(hm, hp);
    if (m * m == s.square(hm) * s.square(hp)) continue;  // proportional
    ChernData chern;
    chern.c1 = random_vector(rng, b2, 2);
    const std::int64_t c1_sq = s.square(chern.c1);
    const std::int64_t delta = uniform(rng, 1, 24);
    // Smallest c2 with 4 c2 - c1^2 >= delta.
    std::int64_t c2 = (delta + c1_sq) / 4;
    while (4 * c2 - c1_sq < delta) ++c2;
    chern.c2 = c2;
    const std::int64_t bound = coordinate_bound(s, chern, hm, hp);
    if (bound < 0 || bound > max_coord) continue;
    return {std::move(s), chern, hm, hp};
  }
  throw Error(ErrorKind::RangeError, "could not generate an enumeration problem");
}

}  // namespace wallcross
