#pragma once

// Segre-integral classes on Hilb^d(S u S): the t-classes, the first-integral
// class, the correction class, R_d and its reduction U_d to monomials in xi
// and pt. Everything is templated on the cohomology context so that the same
// code runs over a concrete surface and over Q[xi^2, xi.K, K^2].

#include <map>
#include <utility>

#include "wallcross/lattice_walls.hpp"
#include "wallcross/symmetric_ring.hpp"

namespace wallcross {

template <typename Scalar>
struct TClassSet {
  MixedClass<Scalar> t1m, t2m, t3m;
  MixedClass<Scalar> t1p, t2p, t3p;
  MixedClass<Scalar> t1, t2, t3;
};

namespace detail {

// a0 + (u xi + v K) + (f xi^2 + g xi.K + h K^2 + k s2) pt
template <typename Scalar>
MixedClass<Scalar> tclass(const CohomologyContext<Scalar>& ctx, long a0,
                          long u, long v, long f, long g, long h, long k) {
  Vector<Scalar> r2 = ctx.xi * Scalar(u) + ctx.K * Scalar(v);
  Scalar r4 = Scalar(f) * ctx.xi_sq() + Scalar(g) * ctx.xi_K() +
              Scalar(h) * ctx.K_sq() + Scalar(k) * ctx.s2;
  return MixedClass<Scalar>::make(Scalar(a0), r2, r4);
}

}  // namespace detail

/// t_{i-} as printed; t_{i+} is t_{i-} with K replaced by -K.
template <typename Scalar>
TClassSet<Scalar> t_classes(const CohomologyContext<Scalar>& ctx) {
  TClassSet<Scalar> t;
  t.t1m = detail::tclass(ctx, 1, 2, -1, 3, -3, 1, 0);
  t.t2m = detail::tclass(ctx, 3, 18, -13, 63, -91, 33, 5);
  t.t3m = detail::tclass(ctx, 27, 270, -237, 0, 0, 0, 0);
  t.t1p = detail::tclass(ctx, 1, 2, 1, 3, 3, 1, 0);
  t.t2p = detail::tclass(ctx, 3, 18, 13, 63, 91, 33, 5);
  t.t3p = detail::tclass(ctx, 27, 270, 237, 0, 0, 0, 0);
  t.t1 = t.t1m + t.t1p;
  t.t2 = t.t2m + t.t2p;
  t.t3 = t.t3m + t.t3p;
  return t;
}

namespace detail {

template <typename Scalar>
SymClass<Scalar> diag(const MixedClass<Scalar>& a, int j) {
  return SymClass<Scalar>::diagonal(a, j);
}

// coeff * head * t1^{*(d - level(head))}, or zero when that is negative.
template <typename Scalar>
void add_padded(SymClass<Scalar>& out, const Rational& coeff,
                const SymClass<Scalar>& head, const MixedClass<Scalar>& t1,
                int d) {
  const int rest = d - head.level();
  if (rest < 0 || coeff == 0) return;
  out += head * star_pow(diag(t1, 1), rest) * Scalar(coeff);
}

// a0 + u xi + (f xi^2 + h K^2 + k s2) pt
template <typename Scalar>
MixedClass<Scalar> xi_class(const CohomologyContext<Scalar>& ctx, long a0,
                            long u, long f, long h, long k) {
  return tclass(ctx, a0, u, 0, f, 0, h, k);
}

}  // namespace detail

template <typename Scalar>
SymClass<Scalar> first_integral_class(const CohomologyContext<Scalar>& ctx,
                                      int d) {
  const TClassSet<Scalar> t = t_classes(ctx);
  const auto t2 = detail::diag(t.t2, 2);
  SymClass<Scalar> out(d);
  detail::add_padded(out, Rational(1), SymClass<Scalar>::unit(0), t.t1, d);
  detail::add_padded(out, -binomial(d, 2), t2, t.t1, d);
  detail::add_padded(out, 2 * binomial(d, 3), detail::diag(t.t3, 3), t.t1, d);
  detail::add_padded(out, 3 * binomial(d, 4), t2 * t2, t.t1, d);
  return out;
}

template <typename Scalar>
SymClass<Scalar> correction_class(const CohomologyContext<Scalar>& ctx, int d) {
  const TClassSet<Scalar> t = t_classes(ctx);
  const Rational dd(d);
  const auto small = detail::diag(detail::xi_class(ctx, 2, 12, 0, 0, 0), 2);
  SymClass<Scalar> out(d);
  detail::add_padded(out, -dd * (dd - 1),
                     detail::diag(detail::xi_class(ctx, 2, 12, 42, 1, 3), 2),
                     t.t1, d);
  detail::add_padded(out, dd * (dd - 1) * (dd - 2),
                     detail::diag(detail::xi_class(ctx, 30, 260, 0, 0, 0), 3),
                     t.t1, d);
  detail::add_padded(out, 2 * dd * (dd - 1) * (dd - 2) * (dd - 3),
                     small * small, t.t1, d);
  return out;
}

template <typename Scalar>
SymClass<Scalar> R_class(const CohomologyContext<Scalar>& ctx, int d) {
  const TClassSet<Scalar> t = t_classes(ctx);
  const Rational dd(d);
  const auto small = detail::diag(detail::xi_class(ctx, 5, 30, 0, 0, 0), 2);
  SymClass<Scalar> out(d);
  detail::add_padded(out, Rational(1), SymClass<Scalar>::unit(0), t.t1, d);
  detail::add_padded(out, -dd * (dd - 1),
                     detail::diag(detail::xi_class(ctx, 5, 30, 105, 34, 8), 2),
                     t.t1, d);
  detail::add_padded(out, dd * (dd - 1) * (dd - 2),
                     detail::diag(detail::xi_class(ctx, 48, 440, 0, 0, 0), 3),
                     t.t1, d);
  detail::add_padded(out, dd * (dd - 1) * (dd - 2) * (dd - 3) / 2,
                     small * small, t.t1, d);
  return out;
}

/// Coefficients u_{x,y} of xi^{*x} pt^{*y} 1^{*(d-x-y)}.
template <typename Scalar>
using XiPtCoefficients = std::map<std::pair<int, int>, Scalar>;

/// Reads a class made of xi, pt and 1 factors of size one. Monomials of any
/// other shape are returned in `rest` when it is non-null.
template <typename Scalar>
XiPtCoefficients<Scalar> xi_pt_coefficients(const CohomologyContext<Scalar>& ctx,
                                            const SymClass<Scalar>& x,
                                            SymClass<Scalar>* rest = nullptr) {
  const int b2 = ctx.b2();
  const auto xi = MixedClass<Scalar>::divisor(ctx.xi);
  const auto pt = MixedClass<Scalar>::point(b2);
  XiPtCoefficients<Scalar> out;
  if (rest) *rest = SymClass<Scalar>(x.level());
  for (const auto& [m, c] : x.terms()) {
    int nx = 0, ny = 0;
    bool shaped = true;
    for (const auto& f : m.factors()) {
      if (f.size != 1) shaped = false;
      else if (f.cls == xi) ++nx;
      else if (f.cls == pt) ++ny;
      else shaped = false;
    }
    if (shaped) {
      out[{nx, ny}] += c;
      if (is_zero(out[{nx, ny}])) out.erase({nx, ny});
    } else if (rest) {
      rest->add(m, c);
    }
  }
  return out;
}

/// The six printed coefficients of U_d (x + y <= 2), with s2 = 2K^2 - 12
/// already substituted.
template <typename Scalar>
XiPtCoefficients<Scalar> printed_U(const CohomologyContext<Scalar>& ctx,
                                   int d) {
  const Scalar X = ctx.xi_sq();
  const Scalar Z = ctx.K_sq();
  const Scalar D(d);
  const Rational p = pow2(d);
  XiPtCoefficients<Scalar> u;
  u[{0, 0}] = Scalar(p);
  u[{1, 0}] = Scalar(2 * p) * D;
  u[{2, 0}] = Scalar(2 * p) * D * (D - 1);
  u[{0, 1}] = Scalar(p) * D * (Scalar(3) * X + Z - Scalar(5) * D + Scalar(5));
  u[{1, 1}] = Scalar(p) * D * (D - 1) *
              (Scalar(6) * X + Scalar(2) * Z - Scalar(10) * D + Scalar(5));
  u[{0, 2}] = Scalar(p / 4) * D * (D - 1) *
              (Scalar(18) * X * X + Scalar(12) * X * Z + Scalar(2) * Z * Z -
               Scalar(60) * D * X - Scalar(20) * D * Z + Scalar(50) * D * D +
               Scalar(15) * X - Scalar(10) * Z - Scalar(34) * D - Scalar(36));
  // Binomials vanish for small d.
  for (auto it = u.begin(); it != u.end();) {
    if (it->first.first + it->first.second > d || is_zero(it->second))
      it = u.erase(it);
    else
      ++it;
  }
  return u;
}

/// Splits every factor (c)_j into r0 (1)_j + lambda (xi)_j + r4 (pt)_j with
/// coefficients pulled out. Degree-2 parts not proportional to xi are kept.
template <typename Scalar>
SymClass<Scalar> split_xi_pt(const CohomologyContext<Scalar>& ctx,
                             const SymClass<Scalar>& x) {
  const int b2 = ctx.b2();
  Eigen::Index lead = 0;
  while (lead < b2 && is_zero(ctx.xi(lead))) ++lead;
  if (lead == b2) throw Error(ErrorKind::RangeError, "xi must be nonzero");
  const auto xi = MixedClass<Scalar>::divisor(ctx.xi);
  SymClass<Scalar> out(x.level());
  for (const auto& [m, c] : x.terms()) {
    SymClass<Scalar> partial(SymMonomial<Scalar>(m.padding()), c);
    for (const auto& f : m.factors()) {
      SymClass<Scalar> piece(f.size);
      auto single = [&](const MixedClass<Scalar>& cls, const Scalar& coeff) {
        piece.add(SymMonomial<Scalar>(f.size, {{cls, f.size}}), coeff);
      };
      single(MixedClass<Scalar>::unit(b2), f.cls.r0);
      single(MixedClass<Scalar>::point(b2), f.cls.r4);
      const Scalar lambda = f.cls.r2(lead) / ctx.xi(lead);
      if (f.cls.r2 == ctx.xi * lambda) {
        single(xi, lambda);
      } else {
        single(MixedClass<Scalar>::divisor(f.cls.r2), Scalar(1));
      }
      partial = partial * piece;
    }
    out += partial;
  }
  return out;
}

/// Diagonal reduction of R_d split into xi, pt and 1 factors, before
/// truncation: the class U'_d whose alpha-bar integrals agree with R_d's.
template <typename Scalar>
SymClass<Scalar> reduce_to_xi_pt(const CohomologyContext<Scalar>& ctx, int d) {
  return split_xi_pt(ctx, reduce_diagonal(R_class(ctx, d)));
}

/// Truncation of the reduced class to xi^{*x} pt^{*y} with x + y <= 2.
template <typename Scalar>
SymClass<Scalar> derive_U_unchecked(const CohomologyContext<Scalar>& ctx,
                                    int d) {
  const int b2 = ctx.b2();
  const auto xi = MixedClass<Scalar>::divisor(ctx.xi);
  const auto pt = MixedClass<Scalar>::point(b2);
  const auto coeffs = xi_pt_coefficients(ctx, reduce_to_xi_pt(ctx, d));
  SymClass<Scalar> out(d);
  for (const auto& [xy, c] : coeffs) {
    if (xy.first + xy.second > 2) continue;
    std::vector<SymFactor<Scalar>> f;
    for (int i = 0; i < xy.first; ++i) f.push_back({xi, 1});
    for (int i = 0; i < xy.second; ++i) f.push_back({pt, 1});
    out.add(SymMonomial<Scalar>(d, std::move(f)), c);
  }
  return out;
}

/// derive_U_unchecked, verified against printed_U. Throws IdentityViolation
/// naming the first disagreeing coefficient. Requires xi != 0.
template <typename Scalar>
SymClass<Scalar> derive_U(const CohomologyContext<Scalar>& ctx, int d) {
  SymClass<Scalar> u = derive_U_unchecked(ctx, d);
  const auto got = xi_pt_coefficients(ctx, u);
  const auto want = printed_U(ctx, d);
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; x + y <= 2; ++y) {
      auto g = got.count({x, y}) ? got.at({x, y}) : Scalar(0);
      auto w = want.count({x, y}) ? want.at({x, y}) : Scalar(0);
      if (!(g == w)) {
        using wallcross::to_string;
        throw Error(ErrorKind::IdentityViolation,
                    "U_" + std::to_string(d) + " coefficient of xi^" +
                        std::to_string(x) + " pt^" + std::to_string(y) +
                        ": derived " + to_string(g) + ", printed " +
                        to_string(w));
      }
    }
  return u;
}

/// Concrete-surface conveniences.
SymClass<Rational> first_integral_class(const SurfaceData& s,
                                        const IntVector& xi, int d);
SymClass<Rational> correction_class(const SurfaceData& s, const IntVector& xi,
                                    int d);
SymClass<Rational> R_class(const SurfaceData& s, const IntVector& xi, int d);
SymClass<Rational> derive_U(const SurfaceData& s, const IntVector& xi, int d);

enum class ExtSide { Minus, Plus };

/// Rank of the Ext sheaf over Hilb^n x Hilb^m: -<xi(xi - K)>/2 + n + m - 1 on
/// the minus side, the same with xi -> -xi on the plus side.
std::int64_t ext_rank(const SurfaceData& s, const IntVector& xi,
                      std::int64_t n, std::int64_t m, ExtSide side);

}  // namespace wallcross
