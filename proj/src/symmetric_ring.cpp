#include "wallcross/symmetric_ring.hpp"

#include <numeric>

namespace wallcross {

namespace {

void add_into(TensorClass& acc, const TensorClass& t) {
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (t[i] != 0) acc[i] += t[i];
}

// Multiplies by (sum_k p_k^* x)^times.
TensorClass apply_symmetric(const SurfaceData& s, TensorClass t,
                            const MixedClass<Rational>& x, int times) {
  for (int n = 0; n < times; ++n) {
    TensorClass next(t.level(), t.dim());
    for (int slot = 0; slot < t.level(); ++slot)
      add_into(next, t.multiply_slot(slot, x, s));
    t = std::move(next);
  }
  return t;
}

TensorClass symmetrized(const TensorClass& t) {
  std::vector<int> perm(t.level());
  std::iota(perm.begin(), perm.end(), 0);
  TensorClass acc(t.level(), t.dim());
  Rational count = 0;
  do {
    add_into(acc, t.permuted(perm));
    count += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] /= count;
  return acc;
}

}  // namespace

TensorClass block_tensor(const SurfaceData& s, const SymMonomial<Rational>& m) {
  const int dim = s.b2() + 2;
  TensorClass t = TensorClass::unit(0, dim);
  for (const auto& f : m.factors()) {
    if (f.cls.b2() != s.b2())
      throw Error(ErrorKind::DimensionMismatch,
                  "factor class does not match the surface");
    t = t.outer(diagonal_pushforward(s, f.cls, f.size));
  }
  return t.outer(TensorClass::unit(m.padding(), dim));
}

Rational integrate_oracle(const SurfaceData& s, const SymMonomial<Rational>& m,
                          const WeightSpec& w, const OracleCaps& caps) {
  const int d = m.level();
  if (d > caps.max_level)
    throw Error(ErrorKind::LevelTooLarge,
                "level " + std::to_string(d) + " exceeds the oracle cap " +
                    std::to_string(caps.max_level));
  if (s.b2() > caps.max_b2)
    throw Error(ErrorKind::LevelTooLarge,
                "b2 = " + std::to_string(s.b2()) + " exceeds the oracle cap " +
                    std::to_string(caps.max_b2));
  if (caps.symmetrize && d > 3)
    throw Error(ErrorKind::LevelTooLarge,
                "symmetrized oracle is limited to level 3");
  s.check_length(w.alpha, "alpha");
  if (w.b < 0 || w.c < 0)
    throw Error(ErrorKind::DegreeMismatch, "negative weight exponent");
  if (d == 0) return (w.b == 0 && w.c == 0) ? Rational(1) : Rational(0);
  if (m.is_zero()) return 0;
  TensorClass t = block_tensor(s, m);
  if (caps.symmetrize) t = symmetrized(t);
  t = apply_symmetric(s, std::move(t),
                      MixedClass<Rational>::divisor(to_rational(w.alpha)), w.b);
  t = apply_symmetric(s, std::move(t), MixedClass<Rational>::point(s.b2()),
                      w.c);
  return t.integrate();
}

Rational integrate_oracle(const SurfaceData& s, const SymClass<Rational>& x,
                          const WeightSpec& w, const OracleCaps& caps) {
  if (x.level() > caps.max_level)
    throw Error(ErrorKind::LevelTooLarge,
                "level " + std::to_string(x.level()) +
                    " exceeds the oracle cap " + std::to_string(caps.max_level));
  Rational total = 0;
  for (const auto& [m, c] : x.terms()) total += c * integrate_oracle(s, m, w, caps);
  return total;
}

Rational integrate_closed(const SurfaceData& s, const IntVector& xi, int d,
                          int x, int y, const WeightSpec& w) {
  s.check_length(xi, "xi");
  s.check_length(w.alpha, "alpha");
  if (d < 0 || x < 0 || y < 0 || w.c < 0 || x + y > d)
    throw Error(ErrorKind::DegreeMismatch, "need 0 <= x + y <= d");
  const int b = 2 * d - 2 * w.c - x - 2 * y;
  if (b < 0 || w.b != b)
    throw Error(ErrorKind::DegreeMismatch,
                "weight alpha-bar^" + std::to_string(w.b) +
                    " pt-bar^" + std::to_string(w.c) +
                    " does not have complementary degree (b must be " +
                    std::to_string(b) + ")");
  const int free = d - x - y;
  if (w.c > free) return 0;
  const Rational q = Rational(s.square(w.alpha));
  const Rational xa = Rational(s.pair(xi, w.alpha));
  return factorial(free) / factorial(free - w.c) * factorial(b) /
         pow2(free - w.c) * power(q, free - w.c) * power(xa, x);
}

SymMonomial<Rational> xi_pt_monomial(const SurfaceData& s, const IntVector& xi,
                                     int d, int x, int y) {
  if (x < 0 || y < 0 || x + y > d)
    throw Error(ErrorKind::DegreeMismatch, "need 0 <= x + y <= d");
  std::vector<SymFactor<Rational>> factors;
  const auto xi_cls = MixedClass<Rational>::divisor(to_rational(xi));
  const auto pt = MixedClass<Rational>::point(s.b2());
  for (int i = 0; i < x; ++i) factors.push_back({xi_cls, 1});
  for (int i = 0; i < y; ++i) factors.push_back({pt, 1});
  return SymMonomial<Rational>(d, std::move(factors));
}

Rational special_pt_reduction(const SurfaceData& s, const IntVector& alpha,
                              int d) {
  if (d < 2) throw Error(ErrorKind::RangeError, "need d >= 2");
  const WeightSpec w{alpha, 2 * d - 4, 1};
  const SymMonomial<Rational> diag(
      d, {{MixedClass<Rational>::unit(s.b2()), 2}});
  const Rational left = integrate_oracle(s, diag, w);
  const Rational right =
      Rational(4 * d - 6, d - 1) *
      integrate_closed(s, IntVector::Zero(s.b2()), d, 0, 1, w);
  if (left != right)
    throw Error(ErrorKind::IdentityViolation,
                "diagonal pt reduction fails at d = " + std::to_string(d) +
                    ": " + to_string(left) + " != " + to_string(right));
  return left;
}

}  // namespace wallcross
