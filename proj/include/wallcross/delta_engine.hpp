#pragma once

// Change of Donaldson invariants across walls: the P/Q polynomial families,
// delta_{xi,l,r} as a polynomial in L = <xi, .>/2 and q = (.)^2, its exact
// evaluation for d <= 2 and totals over all separating classes.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wallcross/hilbert_segre.hpp"
#include "wallcross/lattice_walls.hpp"

namespace wallcross {

/// coef * L^powL * q^powQ
struct WallTerm {
  Rational coef;
  int powL = 0;
  int powQ = 0;
  bool operator==(const WallTerm&) const = default;
};

struct WallCrossingPolynomial {
  IntVector xi;
  int l = 0;
  std::vector<WallTerm> terms;  // powL descending, powL + 2 powQ = l
  /// Valid modulo L^modulus_exponent.
  std::int64_t modulus_exponent = 0;
  bool exact = false;

  /// Value at alpha with L = <xi, alpha>/2 and q = alpha^2.
  Rational evaluate(const SurfaceData& s, const IntVector& alpha) const;
};

template <typename Scalar>
std::array<Scalar, 3> p_polys(const Scalar& N, const Scalar& d,
                              const Scalar& Ksq, const Scalar& xisq) {
  const Scalar& X = xisq;
  const Scalar& Z = Ksq;
  auto c = [](long v) { return Scalar(v); };
  return {
      c(1),
      c(8) * N - c(26) * d + c(6) * X + c(2) * Z + c(26),
      c(18) * X * X + c(12) * X * Z + c(2) * Z * Z + c(48) * N * X -
          c(156) * d * X - c(52) * d * Z + c(338) * d * d + c(16) * Z * N +
          c(32) * N * N - c(208) * d * N + c(207) * X + c(54) * Z +
          c(264) * N - c(882) * d + c(508),
  };
}

template <typename Scalar>
std::array<Scalar, 3> q_polys(const Scalar& N, const Scalar& d,
                              const Scalar& Ksq) {
  const Scalar& Z = Ksq;
  auto c = [](long v) { return Scalar(v); };
  return {
      c(1),
      c(2) * N + c(2) * Z - c(2) * d + c(8),
      c(2) * N * N - c(4) * d * N + c(4) * N * Z + c(21) * N + c(2) * d * d -
          c(4) * d * Z - c(18) * d + c(2) * Z * Z + c(18) * Z + c(49),
  };
}

/// P_m(l, d, K^2, xi^2) + 21 m c for m + c <= 2. Throws RangeError otherwise.
template <typename Scalar>
Scalar q_mc(int m, int c, const Scalar& l, const Scalar& d, const Scalar& Ksq,
            const Scalar& xisq) {
  if (m < 0 || c < 0 || m + c > 2)
    throw Error(ErrorKind::RangeError, "Q_{m,c} needs m, c >= 0, m + c <= 2");
  return p_polys(l, d, Ksq, xisq)[m] + Scalar(21 * m * c);
}

/// The double sum over c <= 2 and c <= k <= 2 with Q_{k-c,c}; terms with a
/// negative factorial argument are omitted and like powers are merged.
std::vector<WallTerm> leading_terms(std::int64_t l, std::int64_t r,
                                    std::int64_t d, std::int64_t e,
                                    std::int64_t Ksq, std::int64_t xisq);

/// The r = 0 form written with Q_k(N, d, K^2).
std::vector<WallTerm> leading_terms_top(std::int64_t N, std::int64_t d,
                                        std::int64_t e, std::int64_t Ksq);

/// Throws WeightMismatch unless l + 2r = N.
void check_weight(const SurfaceData& s, const ChernData& chern, std::int64_t l,
                  std::int64_t r);

WallCrossingPolynomial delta_leading(const SurfaceData& s,
                                     const ChernData& chern,
                                     const WallClass& wall, std::int64_t l,
                                     std::int64_t r);

/// Full sum over b <= l, c <= r with every Segre integral computed from R_d
/// by the tensor oracle. Throws DTooLarge for d >= 3.
Rational delta_exact_small_d(const SurfaceData& s, const ChernData& chern,
                             const WallClass& wall, std::int64_t l,
                             std::int64_t r, const IntVector& alpha,
                             const OracleCaps& caps = {});

struct WallContribution {
  WallClass wall;
  WallCrossingPolynomial delta;
};

struct WallEvaluation {
  IntVector xi;
  Rational value;
  std::string label;  // "exact" or "leading-order"
  bool uncertified = false;
};

struct TotalEvaluation {
  Rational total;  // n2 * sum of the per-wall values
  std::string label;
  std::vector<WallEvaluation> walls;
};

struct TotalChange {
  std::int64_t n2 = 1;
  std::vector<WallContribution> walls;

  TotalEvaluation evaluate(const SurfaceData& s, const IntVector& alpha) const;
};

TotalChange total_change(const SurfaceData& s, const ChernData& chern,
                         const IntVector& h_minus, const IntVector& h_plus,
                         std::int64_t l, std::int64_t r, unsigned threads = 1);

/// (-1)^(c1^2 + c1.K).
int donaldson_sign(const SurfaceData& s, const ChernData& chern);

}  // namespace wallcross
