#pragma once

// The ring of symmetric classes on S^d under the star product, with the
// closed-form integrals against symmetric weights and a brute-force tensor
// oracle.
//
// A monomial at level d is a multiset of decorated small diagonals (a)_j,
// padded with 1^{*(d - sum j)}. Classes are kept unexpanded until needed.

#include <algorithm>
#include <map>
#include <vector>

#include "wallcross/surface.hpp"
#include "wallcross/tensor.hpp"

namespace wallcross {

template <typename Scalar>
struct SymFactor {
  MixedClass<Scalar> cls;
  int size = 1;
};

template <typename Scalar>
int compare(const SymFactor<Scalar>& a, const SymFactor<Scalar>& b) {
  if (a.size != b.size) return a.size < b.size ? -1 : 1;
  return compare(a.cls, b.cls);
}

template <typename Scalar>
class SymMonomial {
 public:
  SymMonomial() = default;
  explicit SymMonomial(int level) : level_(level) {
    if (level < 0) throw Error(ErrorKind::RangeError, "negative level");
  }
  SymMonomial(int level, std::vector<SymFactor<Scalar>> factors)
      : level_(level), factors_(std::move(factors)) {
    canonicalize();
  }

  int level() const { return level_; }
  const std::vector<SymFactor<Scalar>>& factors() const { return factors_; }
  int occupied() const {
    int n = 0;
    for (const auto& f : factors_) n += f.size;
    return n;
  }
  int padding() const { return level_ - occupied(); }
  /// True if some factor class vanishes.
  bool is_zero() const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [](const auto& f) { return f.cls.is_zero(); });
  }

  friend SymMonomial operator*(const SymMonomial& a, const SymMonomial& b) {
    std::vector<SymFactor<Scalar>> all = a.factors_;
    all.insert(all.end(), b.factors_.begin(), b.factors_.end());
    return SymMonomial(a.level_ + b.level_, std::move(all));
  }

  friend int compare(const SymMonomial& a, const SymMonomial& b) {
    if (a.level_ != b.level_) return a.level_ < b.level_ ? -1 : 1;
    if (a.factors_.size() != b.factors_.size())
      return a.factors_.size() < b.factors_.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.factors_.size(); ++i)
      if (int c = compare(a.factors_[i], b.factors_[i])) return c;
    return 0;
  }
  friend bool operator<(const SymMonomial& a, const SymMonomial& b) {
    return compare(a, b) < 0;
  }
  friend bool operator==(const SymMonomial& a, const SymMonomial& b) {
    return compare(a, b) == 0;
  }

 private:
  void canonicalize() {
    for (const auto& f : factors_)
      if (f.size < 1)
        throw Error(ErrorKind::RangeError, "diagonal size must be positive");
    std::erase_if(factors_, [](const auto& f) {
      return f.size == 1 && f.cls.is_unit();
    });
    std::sort(factors_.begin(), factors_.end(),
              [](const auto& a, const auto& b) { return compare(a, b) < 0; });
    if (occupied() > level_)
      throw Error(ErrorKind::RangeError, "factors exceed the level");
  }

  int level_ = 0;
  std::vector<SymFactor<Scalar>> factors_;
};

/// Complex codimension in S^d of a monomial whose factor classes have pure
/// degree: (a)_j contributes 2(j - 1) + deg(a) / 2. Mixed factors count by
/// their lowest degree.
template <typename Scalar>
int codimension(const SymMonomial<Scalar>& m) {
  int codim = 0;
  for (const auto& f : m.factors()) {
    int low = 2;
    if (!is_zero(f.cls.r0)) {
      low = 0;
    } else {
      for (Eigen::Index i = 0; i < f.cls.r2.size(); ++i)
        if (!is_zero(f.cls.r2(i))) low = 1;
    }
    codim += 2 * (f.size - 1) + low;
  }
  return codim;
}

template <typename Scalar>
class SymClass {
 public:
  using Terms = std::map<SymMonomial<Scalar>, Scalar>;

  SymClass() = default;
  explicit SymClass(int level) : level_(level) {}
  SymClass(const SymMonomial<Scalar>& m, const Scalar& coeff = Scalar(1))
      : level_(m.level()) {
    add(m, coeff);
  }

  /// 1^{*level}.
  static SymClass unit(int level) { return SymClass(SymMonomial<Scalar>(level)); }
  /// (a)_j at level j.
  static SymClass diagonal(const MixedClass<Scalar>& a, int j) {
    return SymClass(SymMonomial<Scalar>(j, {SymFactor<Scalar>{a, j}}));
  }

  int level() const { return level_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const SymMonomial<Scalar>& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add(const SymMonomial<Scalar>& m, const Scalar& coeff) {
    if (m.level() != level_)
      throw Error(ErrorKind::DimensionMismatch, "mixing symmetric levels");
    if (wallcross::is_zero(coeff) || m.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (wallcross::is_zero(it->second)) terms_.erase(it);
    }
  }

  SymClass& operator+=(const SymClass& o) {
    check_level(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  SymClass& operator-=(const SymClass& o) {
    check_level(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  SymClass& operator*=(const Scalar& s) {
    if (wallcross::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend SymClass operator+(SymClass a, const SymClass& b) { return a += b; }
  friend SymClass operator-(SymClass a, const SymClass& b) { return a -= b; }
  friend SymClass operator-(SymClass a) { return a *= Scalar(-1); }
  friend SymClass operator*(SymClass a, const Scalar& s) { return a *= s; }
  friend SymClass operator*(const Scalar& s, SymClass a) { return a *= s; }

  /// Star product.
  friend SymClass operator*(const SymClass& x, const SymClass& y) {
    SymClass out(x.level_ + y.level_);
    for (const auto& [mx, cx] : x.terms_)
      for (const auto& [my, cy] : y.terms_) out.add(mx * my, cx * cy);
    return out;
  }

  friend bool operator==(const SymClass& a, const SymClass& b) {
    return a.level_ == b.level_ && a.terms_ == b.terms_;
  }

  /// Multilinear expansion: every factor becomes a basis class (1, a
  /// coordinate divisor or pt) with its coefficient pulled out.
  SymClass expanded() const {
    SymClass out(level_);
    for (const auto& [m, c] : terms_) {
      SymClass partial(SymMonomial<Scalar>(level_ - m.occupied()), c);
      for (const auto& f : m.factors()) {
        SymClass piece(f.size);
        const int b2 = f.cls.b2();
        if (!wallcross::is_zero(f.cls.r0))
          piece.add(SymMonomial<Scalar>(
                        f.size, {{MixedClass<Scalar>::unit(b2), f.size}}),
                    f.cls.r0);
        for (int i = 0; i < b2; ++i) {
          if (wallcross::is_zero(f.cls.r2(i))) continue;
          auto e = MixedClass<Scalar>::zero(b2);
          e.r2(i) = Scalar(1);
          piece.add(SymMonomial<Scalar>(f.size, {{e, f.size}}), f.cls.r2(i));
        }
        if (!wallcross::is_zero(f.cls.r4))
          piece.add(SymMonomial<Scalar>(
                        f.size, {{MixedClass<Scalar>::point(b2), f.size}}),
                    f.cls.r4);
        partial = partial * piece;
      }
      out += partial;
    }
    return out;
  }

  /// Expanded form without monomials of complex codimension above max_codim.
  SymClass truncated(int max_codim = 5) const {
    SymClass out(level_);
    for (const auto& [m, c] : expanded().terms_)
      if (codimension(m) <= max_codim) out.add(m, c);
    return out;
  }

 private:
  void check_level(const SymClass& o) const {
    if (o.level_ != level_)
      throw Error(ErrorKind::DimensionMismatch, "mixing symmetric levels");
  }

  int level_ = 0;
  Terms terms_;
};

/// Equality after expansion and truncation to complex codimension <=
/// max_codim, the range in which the Segre-integral classes are valid.
template <typename Scalar>
bool equivalent(const SymClass<Scalar>& a, const SymClass<Scalar>& b,
                int max_codim = 5) {
  return a.truncated(max_codim) == b.truncated(max_codim);
}

template <typename Scalar>
SymClass<Scalar> star_mul(const SymClass<Scalar>& x, const SymClass<Scalar>& y) {
  return x * y;
}

/// x^{*n}; x^{*0} is the unit at level 0.
template <typename Scalar>
SymClass<Scalar> star_pow(const SymClass<Scalar>& x, int n) {
  if (n < 0) throw Error(ErrorKind::RangeError, "negative star power");
  SymClass<Scalar> out = SymClass<Scalar>::unit(0);
  for (int i = 0; i < n; ++i) out = out * x;
  return out;
}

/// Replaces every (b)_j, split by degree 2i of b, by j^{2-i} b * pt^{*(j-1)}.
/// Integrals against pure alpha-bar powers are preserved; integrals against
/// weights containing pt-bar are not.
template <typename Scalar>
SymClass<Scalar> reduce_diagonal(const SymMonomial<Scalar>& m) {
  SymClass<Scalar> out = SymClass<Scalar>::unit(m.level() - m.occupied());
  for (const auto& f : m.factors()) {
    const int j = f.size;
    const int b2 = f.cls.b2();
    const auto pt = MixedClass<Scalar>::point(b2);
    SymClass<Scalar> pts = star_pow(SymClass<Scalar>::diagonal(pt, 1), j - 1);
    auto part = [&](const MixedClass<Scalar>& b, int weight) {
      return SymClass<Scalar>::diagonal(b, 1) * pts * Scalar(weight);
    };
    SymClass<Scalar> piece(j);
    auto degree0 = MixedClass<Scalar>::zero(b2);
    degree0.r0 = f.cls.r0;
    auto degree2 = MixedClass<Scalar>::zero(b2);
    degree2.r2 = f.cls.r2;
    auto degree4 = MixedClass<Scalar>::zero(b2);
    degree4.r4 = f.cls.r4;
    piece += part(degree0, j * j);
    piece += part(degree2, j);
    piece += part(degree4, 1);
    out = out * piece;
  }
  return out;
}

template <typename Scalar>
SymClass<Scalar> reduce_diagonal(const SymClass<Scalar>& x) {
  SymClass<Scalar> out(x.level());
  for (const auto& [m, c] : x.terms()) out += reduce_diagonal(m) * c;
  return out;
}

/// alpha-bar^b * pt-bar^c with alpha-bar = sum_k p_k^* alpha.
struct WeightSpec {
  IntVector alpha;
  int b = 0;
  int c = 0;
};

struct OracleCaps {
  int max_level = 5;
  int max_b2 = 4;
  /// Average over all slot permutations before integrating (level <= 3).
  bool symmetrize = false;
};

/// Exact integral over S^d of the monomial times the weight, by building the
/// full tensor in H^{2*}(S)^{(x) d}. Throws LevelTooLarge beyond the caps.
Rational integrate_oracle(const SurfaceData& s, const SymMonomial<Rational>& m,
                          const WeightSpec& w, const OracleCaps& caps = {});

Rational integrate_oracle(const SurfaceData& s, const SymClass<Rational>& x,
                          const WeightSpec& w, const OracleCaps& caps = {});

/// The tensor of a monomial with factors in consecutive slot blocks.
TensorClass block_tensor(const SurfaceData& s, const SymMonomial<Rational>& m);

/// int_{S^d} xi^{*x} pt^{*y} 1^{*(d-x-y)} alpha-bar^b pt-bar^c. Throws
/// DegreeMismatch unless x + y <= d and b = 2d - 2c - x - 2y >= 0; zero when
/// c > d - x - y.
Rational integrate_closed(const SurfaceData& s, const IntVector& xi, int d,
                          int x, int y, const WeightSpec& w);

/// The monomial xi^{*x} pt^{*y} 1^{*(d-x-y)} over a concrete surface.
SymMonomial<Rational> xi_pt_monomial(const SurfaceData& s, const IntVector& xi,
                                     int d, int x, int y);

/// Checks int (1)_2 1^{*(d-2)} pt-bar alpha-bar^{2d-4} =
/// (4d-6)/(d-1) int pt 1^{*(d-1)} pt-bar alpha-bar^{2d-4} (oracle on the left,
/// closed form on the right) and returns the common value. Throws
/// IdentityViolation on disagreement.
Rational special_pt_reduction(const SurfaceData& s, const IntVector& alpha,
                              int d);

}  // namespace wallcross
