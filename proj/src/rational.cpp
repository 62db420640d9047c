#include "wallcross/rational.hpp"

#include <charconv>
#include <sstream>

#include "wallcross/error.hpp"

namespace wallcross {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidSurface: return "InvalidSurface";
    case ErrorKind::InvalidPolarization: return "InvalidPolarization";
    case ErrorKind::DegenerateC: return "DegenerateC";
    case ErrorKind::LevelTooLarge: return "LevelTooLarge";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::DTooLarge: return "DTooLarge";
    case ErrorKind::WeightMismatch: return "WeightMismatch";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::UnknownWall: return "UnknownWall";
  }
  return "Unknown";
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer(s))
    throw Error(ErrorKind::ConfigError,
                "malformed rational '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0)
    throw Error(ErrorKind::ConfigError,
                "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational factorial(int n) {
  Integer result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return Rational(result);
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  Integer result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return Rational(result);
}

Rational pow2(int exponent) {
  Integer p = 1;
  p <<= (exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

Rational power(const Rational& base, int exponent) {
  Rational result = 1;
  Rational b = exponent < 0 ? Rational(1) / base : base;
  for (int e = exponent < 0 ? -exponent : exponent; e > 0; e >>= 1) {
    if (e & 1) result *= b;
    b *= b;
  }
  return result;
}

std::string to_string(const IntVector& v) {
  std::ostringstream out;
  out << '[';
  for (Eigen::Index i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v(i);
  out << ']';
  return out.str();
}

}  // namespace wallcross
