#pragma once

// Walls of type (c1, c2) crossed on the segment from H_- to H_+, their
// numerical invariants and the miniwall parameters inside a wall.

#include <string>
#include <vector>

#include "wallcross/surface.hpp"

namespace wallcross {

struct ChernData {
  IntVector c1;
  std::int64_t c2 = 0;

  /// 4 c2 - c1^2.
  std::int64_t discriminant(const SurfaceData& s) const {
    return 4 * c2 - s.square(c1);
  }
  /// N = 4 c2 - c1^2 - 3, the expected dimension of the moduli space.
  std::int64_t expected_dimension(const SurfaceData& s) const {
    return discriminant(s) - 3;
  }
};

enum class Goodness { CertifiedGood, Unknown };

const char* to_string(Goodness g);  // "certified" / "unknown"

struct WallClass {
  IntVector xi;
  std::int64_t xi_sq = 0;
  std::int64_t d = 0;
  std::int64_t e = 0;
  std::int64_t rk_minus = 0;
  std::int64_t rk_plus = 0;
  Rational t0;
  Goodness goodness = Goodness::Unknown;
  bool component_case = false;
};

struct Miniwall {
  Rational a;
  std::int64_t n = 0;
  std::int64_t m = 0;
};

/// Checks H_-^2 > 0, H_+^2 > 0 and <H_- . H_+> > 0. Throws
/// InvalidPolarization otherwise.
void check_polarizations(const SurfaceData& s, const IntVector& h_minus,
                         const IntVector& h_plus);

/// Packages xi with all derived invariants. Throws RangeError unless xi
/// satisfies the defining conditions of a wall of type (c1, c2) separating
/// h_minus from h_plus.
WallClass make_wall_class(const SurfaceData& s, const ChernData& chern,
                          const IntVector& xi, const IntVector& h_minus,
                          const IntVector& h_plus);

/// Every xi with xi = c1 mod 2, c1^2 - 4 c2 <= xi^2 < 0 and
/// <xi.H_-> < 0 < <xi.H_+>, sorted by t0 then lexicographically.
/// Candidate testing is split over `threads` workers.
std::vector<WallClass> enumerate_separating_classes(const SurfaceData& s,
                                                    const ChernData& chern,
                                                    const IntVector& h_minus,
                                                    const IntVector& h_plus,
                                                    unsigned threads = 1);

/// The same set by brute force over the box |xi_i| <= radius.
std::vector<WallClass> enumerate_in_box(const SurfaceData& s,
                                        const ChernData& chern,
                                        const IntVector& h_minus,
                                        const IntVector& h_plus, int radius);

/// Largest |xi_i| any separating class can have, from the enumeration bound.
/// Returns -1 when no class can exist.
std::int64_t coordinate_bound(const SurfaceData& s, const ChernData& chern,
                              const IntVector& h_minus,
                              const IntVector& h_plus);

/// Lattice-level sufficient criteria only; never reports a bad wall.
Goodness certify_goodness(const SurfaceData& s, const WallClass& wall,
                          const IntVector& h_minus, const IntVector& h_plus);

/// Solutions a in [0, 1] of the miniwall equations for n + m = d, sorted by a.
/// C stands in for (n0 + 1)(H_+ - H_-). Throws DegenerateC if <xi.C> <= 0.
std::vector<Miniwall> enumerate_miniwalls(const SurfaceData& s,
                                          const ChernData& chern,
                                          const WallClass& wall,
                                          const IntVector& C);

struct FineCriterion {
  bool fine = false;
  std::string message;
};

/// Universal-family criterion: c1 not divisible by 2, or 4 c2 - c1^2 not
/// divisible by 8.
FineCriterion check_fine_criterion(const SurfaceData& s,
                                   const ChernData& chern);

/// True if some class of a wall of type (c1, c2) is orthogonal to H.
bool lies_on_wall(const SurfaceData& s, const ChernData& chern,
                  const IntVector& h);

/// Admissibility clauses decidable from lattice data: (1) neither
/// polarization lies on a wall, (3) if c1 is divisible by 2 then
/// N > (4 c2 - c1^2) / 2. Clauses (2) and (4) concern moduli dimensions and
/// are not checked; `note` says so.
struct AdmissibilityReport {
  bool h_minus_off_walls = false;
  bool h_plus_off_walls = false;
  bool clause3 = false;
  std::string note;
};

AdmissibilityReport check_admissibility(const SurfaceData& s,
                                        const ChernData& chern,
                                        const IntVector& h_minus,
                                        const IntVector& h_plus);

/// Integer vectors x with x^T form x <= bound, for a positive definite
/// rational form (Fincke-Pohst walk over the LDL^T factorisation).
std::vector<IntVector> enumerate_short_vectors(const Matrix<Rational>& form,
                                               const Rational& bound);

/// Display grouping: classes with the same primitive direction define the
/// same hyperplane. Groups are ordered by their first member.
std::vector<std::vector<WallClass>> group_by_hyperplane(
    const std::vector<WallClass>& walls);

}  // namespace wallcross
