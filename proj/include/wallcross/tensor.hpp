#pragma once

// Kunneth model of H^{2*}(S^n, Q): dense coefficients over n-tuples of the
// basis (1, e_1, ..., e_b2, pt). Only used by the brute-force oracle.

#include <span>
#include <vector>

#include "wallcross/surface.hpp"

namespace wallcross {

class TensorClass {
 public:
  TensorClass(int level, int dim);

  /// 1 (x) ... (x) 1.
  static TensorClass unit(int level, int dim);

  int level() const { return level_; }
  int dim() const { return dim_; }
  std::size_t size() const { return coeffs_.size(); }

  const Rational& operator[](std::size_t flat) const { return coeffs_[flat]; }
  Rational& operator[](std::size_t flat) { return coeffs_[flat]; }
  const Rational& at(std::span<const int> index) const;
  Rational& at(std::span<const int> index);

  /// Row-major: slot 0 is the most significant digit.
  std::size_t flat_index(std::span<const int> index) const;
  std::vector<int> unflatten(std::size_t flat) const;

  /// Exterior product; the slots of `other` follow those of *this.
  TensorClass outer(const TensorClass& other) const;

  /// Multiplication by p_slot^* x.
  TensorClass multiply_slot(int slot, const MixedClass<Rational>& x,
                            const SurfaceData& s) const;

  /// Permutes slots: result slot perm[k] carries source slot k.
  TensorClass permuted(std::span<const int> perm) const;

  /// Integral over S^n: the coefficient of pt (x) ... (x) pt.
  Rational integrate() const;

  bool operator==(const TensorClass& other) const = default;

 private:
  int level_;
  int dim_;
  std::vector<Rational> coeffs_;
};

/// Basis element k of H^{2*}(S) as a mixed class.
MixedClass<Rational> basis_class(int k, int b2);

/// Class of the small diagonal S -> S^j decorated with a, i.e. (a)_j,
/// computed by inverting the Poincare pairing on each slot.
TensorClass diagonal_pushforward(const SurfaceData& s,
                                 const MixedClass<Rational>& a, int j);

}  // namespace wallcross
