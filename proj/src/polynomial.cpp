#include "wallcross/polynomial.hpp"

#include <sstream>

#include "wallcross/error.hpp"

namespace wallcross {

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.terms_.emplace(Monomial{{name, 1}}, Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_term() const { return coefficient({}); }

int Polynomial::total_degree() const {
  int best = 0;
  for (const auto& [m, c] : terms_) {
    int deg = 0;
    for (const auto& [v, e] : m) deg += e;
    best = std::max(best, deg);
  }
  return best;
}

Rational Polynomial::coefficient(const Monomial& monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  Polynomial product;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      product.add_term(m, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

Polynomial& Polynomial::operator/=(const Polynomial& other) {
  if (!other.is_constant() || other.is_zero())
    throw Error(ErrorKind::RangeError,
                "polynomial division by a non-constant or zero divisor");
  const Rational inv = Rational(1) / other.constant_term();
  for (auto& [m, c] : terms_) c *= inv;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial Polynomial::substitute(const std::string& name,
                                  const Polynomial& value) const {
  Polynomial result;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int exponent = 0;
    if (auto it = rest.find(name); it != rest.end()) {
      exponent = it->second;
      rest.erase(it);
    }
    Polynomial term;
    term.add_term(rest, c);
    result += term * pow(value, exponent);
  }
  return result;
}

Rational Polynomial::evaluate(
    const std::map<std::string, Rational>& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [v, e] : m) {
      const auto it = values.find(v);
      if (it == values.end())
        throw Error(ErrorKind::RangeError, "unbound variable " + v);
      term *= power(it->second, e);
    }
    total += term;
  }
  return total;
}

Polynomial pow(const Polynomial& base, int exponent) {
  Polynomial result(1);
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

int compare(const Polynomial& a, const Polynomial& b) {
  if (a.terms() < b.terms()) return -1;
  if (b.terms() < a.terms()) return 1;
  return 0;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest total degree first reads closer to how the formulas are printed.
  std::multimap<int, std::pair<Monomial, Rational>, std::greater<>> ordered;
  for (const auto& [m, c] : terms_) {
    int deg = 0;
    for (const auto& [v, e] : m) deg += e;
    ordered.emplace(deg, std::make_pair(m, c));
  }
  for (const auto& [deg, mc] : ordered) {
    const auto& [m, c] = mc;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == 1 && !m.empty();
    if (!unit) out << to_string(magnitude);
    bool first_var = unit;
    for (const auto& [v, e] : m) {
      if (!first_var) out << '*';
      first_var = false;
      out << v;
      if (e > 1) out << '^' << e;
    }
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const Polynomial& p) {
  return out << p.str();
}

}  // namespace wallcross
