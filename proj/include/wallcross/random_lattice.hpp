#pragma once

// Seeded generators of random surfaces and wall problems shared by the
// verification suites and the tests.

#include <random>

#include "wallcross/lattice_walls.hpp"

namespace wallcross {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

IntVector random_vector(Rng& rng, int n, std::int64_t radius);

/// Product of random elementary integer operations (determinant +-1).
IntMatrix random_unimodular(Rng& rng, int n, int steps = 3);

/// U^T diag(a, -b, -c, ...) U with a random unimodular U and a random
/// characteristic K.
SurfaceData random_surface(Rng& rng, int b2);

/// Integer vectors of positive square in the box |x_i| <= radius, all in the
/// same component of the positive cone.
std::vector<IntVector> positive_cone_vectors(const SurfaceData& s,
                                             std::int64_t radius);

struct WallProblem {
  SurfaceData surface;
  ChernData chern;
  IntVector h_minus;
  IntVector h_plus;
  WallClass wall;
};

/// A random separating class xi with d_xi = d on a random surface of rank
/// b2, with c1 and c2 chosen to match (and N >= 0) and H_-, H_+ on either
/// side.
WallProblem random_wall_problem(Rng& rng, int b2, std::int64_t d);

struct EnumerationProblem {
  SurfaceData surface;
  ChernData chern;
  IntVector h_minus;
  IntVector h_plus;
};

/// A random problem whose separating classes all have |xi_i| <= max_coord
/// (by coordinate_bound).
EnumerationProblem random_enumeration_problem(Rng& rng, int b2,
                                              std::int64_t max_coord);

}  // namespace wallcross
