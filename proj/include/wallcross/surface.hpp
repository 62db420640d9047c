#pragma once

// Even cohomology H^{2*}(S, Q) = H^0 + H^2 + H^4 of a surface with
// p_g = q = 0, modelled by the intersection lattice on H^2.

#include <cstdint>
#include <string>

#include "wallcross/error.hpp"
#include "wallcross/polynomial.hpp"
#include "wallcross/rational.hpp"

namespace wallcross {

struct SurfaceFlags {
  bool minus_K_effective = false;
  bool K_torsion = false;
};

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Exact inertia of a symmetric rational matrix by symmetric Gaussian
/// elimination (Jacobi pivots, with an e_i += e_j step when every remaining
/// diagonal entry vanishes).
Signature signature(const Matrix<Rational>& m);

/// Gauss-Jordan inverse over Q. Throws InvalidSurface if singular.
Matrix<Rational> inverse(const Matrix<Rational>& m);

/// Lattice data of H^2(S, Z) modulo torsion, the canonical class and the
/// number of 2-torsion points. chi(O_S) = 1 throughout.
class SurfaceData {
 public:
  /// Validates symmetry, nondegeneracy, signature (1, b2 - 1), that K is
  /// characteristic (K.x = x.x mod 2) and n2 >= 1. Throws InvalidSurface.
  SurfaceData(IntMatrix gram, IntVector K, std::int64_t n2 = 1,
              SurfaceFlags flags = {});

  int b2() const { return static_cast<int>(gram_.rows()); }
  const IntMatrix& gram() const { return gram_; }
  const IntVector& K() const { return K_; }
  std::int64_t n2() const { return n2_; }
  const SurfaceFlags& flags() const { return flags_; }

  std::int64_t K_sq() const { return pair(K_, K_); }
  /// s_2(S) = 2 K^2 - 12 under chi(O_S) = 1.
  std::int64_t s2() const { return 2 * K_sq() - 12; }

  /// x^T gram y. Throws DimensionMismatch.
  std::int64_t pair(const IntVector& x, const IntVector& y) const;
  std::int64_t square(const IntVector& x) const { return pair(x, x); }
  void check_length(const IntVector& x, const char* what) const;

  const Matrix<Rational>& gram_rational() const { return gram_q_; }
  /// Inverse of the Poincare pairing on the basis 1, e_1..e_b2, pt.
  const Matrix<Rational>& poincare_inverse() const { return poincare_inv_; }

 private:
  IntMatrix gram_;
  IntVector K_;
  std::int64_t n2_;
  SurfaceFlags flags_;
  Matrix<Rational> gram_q_;
  Matrix<Rational> poincare_inv_;
};

/// r0 * 1 + r2 + r4 * pt.
template <typename Scalar>
struct MixedClass {
  Scalar r0{0};
  Vector<Scalar> r2;
  Scalar r4{0};

  static MixedClass zero(int b2) {
    MixedClass m;
    m.r2 = Vector<Scalar>::Constant(b2, Scalar(0));
    return m;
  }
  static MixedClass unit(int b2) {
    MixedClass m = zero(b2);
    m.r0 = Scalar(1);
    return m;
  }
  static MixedClass point(int b2) {
    MixedClass m = zero(b2);
    m.r4 = Scalar(1);
    return m;
  }
  static MixedClass divisor(const Vector<Scalar>& v) {
    MixedClass m = zero(static_cast<int>(v.size()));
    m.r2 = v;
    return m;
  }
  /// a0 + a2 * v + a4 * pt.
  static MixedClass make(const Scalar& a0, const Vector<Scalar>& v,
                         const Scalar& a4) {
    MixedClass m;
    m.r0 = a0;
    m.r2 = v;
    m.r4 = a4;
    return m;
  }

  int b2() const { return static_cast<int>(r2.size()); }

  bool is_zero() const {
    if (!wallcross::is_zero(r0) || !wallcross::is_zero(r4)) return false;
    for (Eigen::Index i = 0; i < r2.size(); ++i)
      if (!wallcross::is_zero(r2(i))) return false;
    return true;
  }
  bool is_unit() const {
    if (!is_one(r0) || !wallcross::is_zero(r4)) return false;
    for (Eigen::Index i = 0; i < r2.size(); ++i)
      if (!wallcross::is_zero(r2(i))) return false;
    return true;
  }

  MixedClass& operator+=(const MixedClass& o) {
    check(o);
    r0 += o.r0;
    r2 += o.r2;
    r4 += o.r4;
    return *this;
  }
  MixedClass& operator-=(const MixedClass& o) {
    check(o);
    r0 -= o.r0;
    r2 -= o.r2;
    r4 -= o.r4;
    return *this;
  }
  MixedClass& operator*=(const Scalar& s) {
    r0 *= s;
    r2 *= s;
    r4 *= s;
    return *this;
  }
  friend MixedClass operator+(MixedClass a, const MixedClass& b) { return a += b; }
  friend MixedClass operator-(MixedClass a, const MixedClass& b) { return a -= b; }
  friend MixedClass operator*(MixedClass a, const Scalar& s) { return a *= s; }
  friend MixedClass operator*(const Scalar& s, MixedClass a) { return a *= s; }

  friend bool operator==(const MixedClass& a, const MixedClass& b) {
    return a.r0 == b.r0 && a.r4 == b.r4 && a.r2 == b.r2;
  }

  void check(const MixedClass& o) const {
    if (o.r2.size() != r2.size())
      throw Error(ErrorKind::DimensionMismatch,
                  "mixed classes over different lattices");
  }
};

/// Total order on coefficient tuples (r0, r2..., r4).
template <typename Scalar>
int compare(const MixedClass<Scalar>& a, const MixedClass<Scalar>& b) {
  if (int c = compare(a.r0, b.r0)) return c;
  if (a.r2.size() != b.r2.size()) return a.r2.size() < b.r2.size() ? -1 : 1;
  for (Eigen::Index i = 0; i < a.r2.size(); ++i)
    if (int c = compare(a.r2(i), b.r2(i))) return c;
  return compare(a.r4, b.r4);
}

/// Cup product on H^{2*}(S) for a given H^2 pairing; degrees above 4 vanish.
template <typename Scalar>
MixedClass<Scalar> cup(const Matrix<Scalar>& gram, const MixedClass<Scalar>& a,
                       const MixedClass<Scalar>& b) {
  a.check(b);
  if (gram.rows() != a.r2.size())
    throw Error(ErrorKind::DimensionMismatch, "cup: lattice rank mismatch");
  MixedClass<Scalar> c;
  c.r0 = a.r0 * b.r0;
  c.r2 = b.r2 * a.r0 + a.r2 * b.r0;
  c.r4 = a.r0 * b.r4 + b.r0 * a.r4 + a.r2.dot(gram * b.r2);
  return c;
}

MixedClass<Rational> cup(const SurfaceData& s, const MixedClass<Rational>& a,
                         const MixedClass<Rational>& b);

/// Integral over S: the pt coefficient.
template <typename Scalar>
const Scalar& integrate(const MixedClass<Scalar>& a) {
  return a.r4;
}

template <typename Scalar>
std::string to_string(const MixedClass<Scalar>& a) {
  using wallcross::to_string;
  std::string out = "(" + to_string(a.r0) + "; [";
  for (Eigen::Index i = 0; i < a.r2.size(); ++i)
    out += (i ? ", " : "") + to_string(a.r2(i));
  return out + "]; " + to_string(a.r4) + ")";
}

/// H^{2*}(S) with the distinguished classes xi and K, over either Q (a
/// concrete surface) or Q[xi^2, xi.K, K^2] (the symbolic context).
template <typename Scalar>
struct CohomologyContext {
  Matrix<Scalar> gram;
  Vector<Scalar> xi;
  Vector<Scalar> K;
  Scalar s2;

  int b2() const { return static_cast<int>(gram.rows()); }
  Scalar pair(const Vector<Scalar>& a, const Vector<Scalar>& b) const {
    return a.dot(gram * b);
  }
  Scalar xi_sq() const { return pair(xi, xi); }
  Scalar xi_K() const { return pair(xi, K); }
  Scalar K_sq() const { return pair(K, K); }
  MixedClass<Scalar> cup(const MixedClass<Scalar>& a,
                         const MixedClass<Scalar>& b) const {
    return wallcross::cup(gram, a, b);
  }
};

CohomologyContext<Rational> concrete_context(const SurfaceData& s,
                                             const IntVector& xi);

/// Names of the indeterminates of the symbolic context.
inline constexpr const char* kXiSq = "X";   // xi^2
inline constexpr const char* kXiK = "Y";    // xi.K
inline constexpr const char* kKSq = "Z";    // K^2

/// H^2 spanned by (xi, K) with gram [[X, Y], [Y, Z]] and s2 = 2Z - 12.
CohomologyContext<Polynomial> symbolic_context();

}  // namespace wallcross
