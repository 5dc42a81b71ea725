#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chull/rational.hpp"
#include "chull/ring.hpp"

namespace chull {

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// sorted in decreasing order under the ring's monomial order and never hold
/// a zero coefficient, so two equal polynomials over the same ring have
/// identical term vectors.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);
  /// Sorts and combines; zero coefficients are dropped.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant term value (0 when absent).
  Rational constant_term() const;

  /// Leading term under the ring's order. Requires nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree(std::size_t var) const;
  bool is_homogeneous() const;
  /// Homogeneous with respect to the ring's weights.
  bool is_weighted_homogeneous() const;
  bool involves(std::size_t var) const;
  /// Bitmask of variables that occur.
  std::uint32_t support() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial derivative(std::size_t var) const;

  /// Ring homomorphism: variable i of this ring maps to images[i], which all
  /// live in the target ring.
  Polynomial substitute(const RingPtr& target, std::span<const Polynomial> images) const;
  /// Moves into a ring holding (at least) every variable that occurs, by name.
  Polynomial to_ring(const RingPtr& target) const;
  /// Replaces one variable by a value, staying in the same ring.
  Polynomial substitute(std::size_t var, const Polynomial& value) const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  /// Coefficients with respect to one variable, index = power of var.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  /// Lcm of denominators over gcd of numerators: multiplying by it yields a
  /// primitive integer polynomial.
  Rational integer_normalizer() const;
  /// Primitive integer multiple with positive leading coefficient under
  /// plain grevlex in the ring's variable order (the canonical form of all
  /// returned defining polynomials).
  Polynomial canonical() const;
  /// Leading term under plain grevlex, independent of the ring's order.
  const Term& grevlex_leading_term() const;
  Polynomial monic() const;

  /// Canonical text form: grevlex-descending terms, `p/q*x^2*y` style.
  std::string to_string() const;

 private:
  void normalize_sorted();

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Parses the polynomial text grammar (a superset: parentheses and integer
/// powers of parenthesized expressions are accepted). Unknown variables are
/// an error.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

/// Collects variable names appearing in a polynomial expression, in order
/// of first appearance.
std::vector<std::string> scan_variables(std::string_view text);

/// Throws RingMismatch unless both share variables and order.
void require_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace chull
