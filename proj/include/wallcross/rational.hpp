#pragma once

// Exact scalar types shared by every module. All arithmetic in the core is
// over Q; lattice data is held in 64-bit integers.

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace wallcross {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<std::int64_t>;
using IntMatrix = Matrix<std::int64_t>;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses "p", "-p" or "p/q". Throws Error(ConfigError) on malformed input.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& value) { return value == 0; }
inline bool is_one(const Rational& value) { return value == 1; }

inline int compare(const Rational& a, const Rational& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

Rational factorial(int n);
Rational binomial(int n, int k);  // 0 outside 0 <= k <= n
Rational pow2(int exponent);      // 2^exponent for any sign
Rational power(const Rational& base, int exponent);

template <typename Derived>
Vector<Rational> to_rational(const Eigen::MatrixBase<Derived>& v) {
  return v.template cast<std::int64_t>().unaryExpr(
      [](std::int64_t x) { return Rational(x); });
}

template <typename Derived>
Matrix<Rational> to_rational_matrix(const Eigen::MatrixBase<Derived>& m) {
  return m.template cast<std::int64_t>().unaryExpr(
      [](std::int64_t x) { return Rational(x); });
}

std::string to_string(const IntVector& v);  // "[a, b, c]"

}  // namespace wallcross
