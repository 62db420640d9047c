#include "wallcross/surface.hpp"

#include <utility>

namespace wallcross {

Signature signature(const Matrix<Rational>& input) {
  Matrix<Rational> a = input;
  const Eigen::Index n = a.rows();
  Signature sig;
  Eigen::Index active = n;
  while (active > 0) {
    // Bring a nonzero diagonal entry to position active-1.
    Eigen::Index pivot = -1;
    for (Eigen::Index i = 0; i < active; ++i)
      if (a(i, i) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = 0; i < active && pi < 0; ++i)
        for (Eigen::Index j = i + 1; j < active; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) {
        sig.zero += static_cast<int>(active);
        break;
      }
      // e_pi <- e_pi + e_pj gives diagonal 2 a(pi, pj) != 0.
      a.row(pi) += a.row(pj);
      a.col(pi) += a.col(pj);
      pivot = pi;
    }
    const Eigen::Index last = active - 1;
    a.row(pivot).swap(a.row(last));
    a.col(pivot).swap(a.col(last));
    const Rational p = a(last, last);
    (p > 0 ? sig.positive : sig.negative) += 1;
    for (Eigen::Index i = 0; i < last; ++i) {
      if (a(i, last) == 0) continue;
      const Rational f = a(i, last) / p;
      for (Eigen::Index j = 0; j < last; ++j) a(i, j) -= f * a(last, j);
    }
    active = last;
  }
  return sig;
}

Matrix<Rational> inverse(const Matrix<Rational>& input) {
  const Eigen::Index n = input.rows();
  if (input.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  Matrix<Rational> a = input;
  Matrix<Rational> inv = Matrix<Rational>::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n)
      throw Error(ErrorKind::InvalidSurface, "matrix is singular");
    a.row(col).swap(a.row(pivot));
    inv.row(col).swap(inv.row(pivot));
    const Rational p = a(col, col);
    a.row(col) /= p;
    inv.row(col) /= p;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      a.row(r) -= f * a.row(col);
      inv.row(r) -= f * inv.row(col);
    }
  }
  return inv;
}

SurfaceData::SurfaceData(IntMatrix gram, IntVector K, std::int64_t n2,
                         SurfaceFlags flags)
    : gram_(std::move(gram)), K_(std::move(K)), n2_(n2), flags_(flags) {
  const auto b2 = gram_.rows();
  if (b2 < 1 || gram_.cols() != b2)
    throw Error(ErrorKind::InvalidSurface, "gram must be a nonempty square matrix");
  if (K_.size() != b2)
    throw Error(ErrorKind::InvalidSurface, "K has length " +
                                               std::to_string(K_.size()) +
                                               ", expected b2 = " +
                                               std::to_string(b2));
  if (gram_ != gram_.transpose())
    throw Error(ErrorKind::InvalidSurface, "gram not symmetric");
  if (n2_ < 1)
    throw Error(ErrorKind::InvalidSurface, "n2 must be at least 1");
  gram_q_ = to_rational_matrix(gram_);
  const Signature sig = signature(gram_q_);
  if (sig.zero != 0)
    throw Error(ErrorKind::InvalidSurface, "gram is degenerate");
  if (sig.positive != 1)
    throw Error(ErrorKind::InvalidSurface,
                "gram has signature (" + std::to_string(sig.positive) + ", " +
                    std::to_string(sig.negative) +
                    "), expected exactly one positive direction");
  const IntVector K_dot = gram_ * K_;
  for (Eigen::Index i = 0; i < b2; ++i)
    if (((K_dot(i) - gram_(i, i)) % 2) != 0)
      throw Error(ErrorKind::InvalidSurface,
                  "K is not characteristic: K.e_" + std::to_string(i + 1) +
                      " and e_" + std::to_string(i + 1) +
                      "^2 differ in parity");

  // Poincare pairing on (1, e_1..e_b2, pt): <1, pt> = 1, <e_i, e_j> = gram.
  const Eigen::Index dim = b2 + 2;
  Matrix<Rational> gram_inv = inverse(gram_q_);
  poincare_inv_ = Matrix<Rational>::Constant(dim, dim, Rational(0));
  poincare_inv_(0, dim - 1) = 1;
  poincare_inv_(dim - 1, 0) = 1;
  poincare_inv_.block(1, 1, b2, b2) = gram_inv;
}

void SurfaceData::check_length(const IntVector& x, const char* what) const {
  if (x.size() != gram_.rows())
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " has length " + std::to_string(x.size()) +
                    ", expected b2 = " + std::to_string(gram_.rows()));
}

std::int64_t SurfaceData::pair(const IntVector& x, const IntVector& y) const {
  check_length(x, "class");
  check_length(y, "class");
  return x.dot(gram_ * y);
}

MixedClass<Rational> cup(const SurfaceData& s, const MixedClass<Rational>& a,
                         const MixedClass<Rational>& b) {
  return cup(s.gram_rational(), a, b);
}

CohomologyContext<Rational> concrete_context(const SurfaceData& s,
                                             const IntVector& xi) {
  s.check_length(xi, "xi");
  CohomologyContext<Rational> ctx;
  ctx.gram = s.gram_rational();
  ctx.xi = to_rational(xi);
  ctx.K = to_rational(s.K());
  ctx.s2 = Rational(s.s2());
  return ctx;
}

CohomologyContext<Polynomial> symbolic_context() {
  const Polynomial X = Polynomial::variable(kXiSq);
  const Polynomial Y = Polynomial::variable(kXiK);
  const Polynomial Z = Polynomial::variable(kKSq);
  CohomologyContext<Polynomial> ctx;
  ctx.gram.resize(2, 2);
  ctx.gram << X, Y, Y, Z;
  ctx.xi.resize(2);
  ctx.xi << Polynomial(1), Polynomial(0);
  ctx.K.resize(2);
  ctx.K << Polynomial(0), Polynomial(1);
  ctx.s2 = Polynomial(2) * Z - Polynomial(12);
  return ctx;
}

}  // namespace wallcross
