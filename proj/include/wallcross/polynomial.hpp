#pragma once

// Sparse multivariate polynomials over Q with named indeterminates. Used as
// the symbolic scalar for identities in N, d, K^2, xi^2, l, r and for the
// symbolic cohomology context (xi^2, xi.K, K^2).

#include <map>
#include <ostream>
#include <string>

#include "wallcross/rational.hpp"

namespace wallcross {

class Polynomial {
 public:
  /// Variable name -> positive exponent.
  using Monomial = std::map<std::string, int>;
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit scalar lift
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(long long constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial variable(const std::string& name);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int total_degree() const;
  /// Coefficient of a monomial given as variable -> exponent.
  Rational coefficient(const Monomial& monomial) const;

  Polynomial substitute(const std::string& name,
                        const Polynomial& value) const;
  /// Evaluates with every variable bound; throws RangeError on a free one.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  /// Division by a nonzero constant polynomial only.
  Polynomial& operator/=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator/(Polynomial a, const Polynomial& b) { return a /= b; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& out, const Polynomial& p);

Polynomial pow(const Polynomial& base, int exponent);

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }
inline bool is_one(const Polynomial& p) { return p == Polynomial(1); }
int compare(const Polynomial& a, const Polynomial& b);
inline std::string to_string(const Polynomial& p) { return p.str(); }

}  // namespace wallcross

namespace Eigen {

template <>
struct NumTraits<wallcross::Polynomial>
    : GenericNumTraits<wallcross::Polynomial> {
  using Real = wallcross::Polynomial;
  using NonInteger = wallcross::Polynomial;
  using Nested = wallcross::Polynomial;
  using Literal = wallcross::Polynomial;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 20,
    MulCost = 40
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
