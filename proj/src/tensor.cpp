#include "wallcross/tensor.hpp"

namespace wallcross {

namespace {

std::size_t ipow(int base, int exponent) {
  std::size_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

}  // namespace

TensorClass::TensorClass(int level, int dim)
    : level_(level), dim_(dim), coeffs_(ipow(dim, level), Rational(0)) {}

TensorClass TensorClass::unit(int level, int dim) {
  TensorClass t(level, dim);
  t.coeffs_[0] = 1;
  return t;
}

std::size_t TensorClass::flat_index(std::span<const int> index) const {
  std::size_t flat = 0;
  for (int k : index) flat = flat * static_cast<std::size_t>(dim_) + k;
  return flat;
}

std::vector<int> TensorClass::unflatten(std::size_t flat) const {
  std::vector<int> index(level_);
  for (int k = level_ - 1; k >= 0; --k) {
    index[k] = static_cast<int>(flat % dim_);
    flat /= dim_;
  }
  return index;
}

const Rational& TensorClass::at(std::span<const int> index) const {
  return coeffs_[flat_index(index)];
}

Rational& TensorClass::at(std::span<const int> index) {
  return coeffs_[flat_index(index)];
}

TensorClass TensorClass::outer(const TensorClass& other) const {
  if (other.dim_ != dim_)
    throw Error(ErrorKind::DimensionMismatch, "tensor dimension mismatch");
  TensorClass out(level_ + other.level_, dim_);
  const std::size_t stride = other.coeffs_.size();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < stride; ++j)
      if (other.coeffs_[j] != 0)
        out.coeffs_[i * stride + j] = coeffs_[i] * other.coeffs_[j];
  }
  return out;
}

MixedClass<Rational> basis_class(int k, int b2) {
  if (k == 0) return MixedClass<Rational>::unit(b2);
  if (k == b2 + 1) return MixedClass<Rational>::point(b2);
  MixedClass<Rational> m = MixedClass<Rational>::zero(b2);
  m.r2(k - 1) = 1;
  return m;
}

TensorClass TensorClass::multiply_slot(int slot, const MixedClass<Rational>& x,
                                       const SurfaceData& s) const {
  const int b2 = s.b2();
  if (dim_ != b2 + 2 || slot < 0 || slot >= level_)
    throw Error(ErrorKind::DimensionMismatch, "multiply_slot out of range");
  // Products basis_k * x expanded in the basis.
  std::vector<std::vector<std::pair<int, Rational>>> table(dim_);
  for (int k = 0; k < dim_; ++k) {
    const MixedClass<Rational> prod = cup(s, basis_class(k, b2), x);
    if (prod.r0 != 0) table[k].emplace_back(0, prod.r0);
    for (int i = 0; i < b2; ++i)
      if (prod.r2(i) != 0) table[k].emplace_back(i + 1, prod.r2(i));
    if (prod.r4 != 0) table[k].emplace_back(b2 + 1, prod.r4);
  }
  const std::size_t stride = ipow(dim_, level_ - 1 - slot);
  TensorClass out(level_, dim_);
  for (std::size_t flat = 0; flat < coeffs_.size(); ++flat) {
    if (coeffs_[flat] == 0) continue;
    const int k = static_cast<int>((flat / stride) % dim_);
    const std::size_t base = flat - static_cast<std::size_t>(k) * stride;
    for (const auto& [target, c] : table[k])
      out.coeffs_[base + static_cast<std::size_t>(target) * stride] +=
          coeffs_[flat] * c;
  }
  return out;
}

TensorClass TensorClass::permuted(std::span<const int> perm) const {
  TensorClass out(level_, dim_);
  std::vector<int> target(level_);
  for (std::size_t flat = 0; flat < coeffs_.size(); ++flat) {
    if (coeffs_[flat] == 0) continue;
    const std::vector<int> index = unflatten(flat);
    for (int k = 0; k < level_; ++k) target[perm[k]] = index[k];
    out.at(target) = coeffs_[flat];
  }
  return out;
}

Rational TensorClass::integrate() const { return coeffs_.back(); }

TensorClass diagonal_pushforward(const SurfaceData& s,
                                 const MixedClass<Rational>& a, int j) {
  if (j < 1)
    throw Error(ErrorKind::RangeError, "diagonal size must be positive");
  const int b2 = s.b2();
  const int dim = b2 + 2;
  // moments(J) = int_S a * b_J1 * ... * b_Jj
  TensorClass moments(j, dim);
  for (std::size_t flat = 0; flat < moments.size(); ++flat) {
    MixedClass<Rational> prod = a;
    for (int k : moments.unflatten(flat)) {
      prod = cup(s, prod, basis_class(k, b2));
      if (prod.is_zero()) break;
    }
    moments[flat] = integrate(prod);
  }
  // Apply the inverse pairing along every slot.
  const Matrix<Rational>& pinv = s.poincare_inverse();
  TensorClass current = moments;
  for (int slot = 0; slot < j; ++slot) {
    TensorClass next(j, dim);
    const std::size_t stride = ipow(dim, j - 1 - slot);
    for (std::size_t flat = 0; flat < current.size(); ++flat) {
      if (current[flat] == 0) continue;
      const int k = static_cast<int>((flat / stride) % dim);
      const std::size_t base = flat - static_cast<std::size_t>(k) * stride;
      for (int i = 0; i < dim; ++i)
        if (pinv(i, k) != 0)
          next[base + static_cast<std::size_t>(i) * stride] +=
              pinv(i, k) * current[flat];
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace wallcross
