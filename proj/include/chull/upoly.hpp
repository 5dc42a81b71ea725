#pragma once

#include <vector>

#include "chull/polynomial.hpp"
#include "chull/rational.hpp"

namespace chull {

/// Dense univariate polynomial over the integers, coefficient i multiplies
/// t^i. Never stores a trailing zero, so the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(const Integer& c) { return UPoly(std::vector<Integer>{c}); }
  static UPoly monomial(std::size_t power, const Integer& c = 1);

  const std::vector<Integer>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }
  const Integer& lead() const { return c_.back(); }
  Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Integer& k);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly derivative() const;
  Integer content() const;
  /// Divided by its content, with positive leading coefficient.
  UPoly primitive() const;
  Integer evaluate(const Integer& x) const;

  /// Exact quotient over Z; returns false when b does not divide a.
  static bool divides_exactly(const UPoly& a, const UPoly& b, UPoly* quotient);
  /// lc(b)^(deg a - deg b + 1) * a mod b.
  static UPoly pseudo_remainder(const UPoly& a, const UPoly& b);
  /// Primitive gcd with positive leading coefficient (gcd(0,0) = 0).
  static UPoly gcd(const UPoly& a, const UPoly& b);

  /// Yun decomposition of a primitive polynomial: result[i] is the product of
  /// the irreducible factors of multiplicity i+1.
  std::vector<UPoly> squarefree_decomposition() const;

  /// Converts to/from a Polynomial in a single variable of `ring`.
  static UPoly from_polynomial(const Polynomial& p, std::size_t var);
  Polynomial to_polynomial(const RingPtr& ring, std::size_t var) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

}  // namespace chull
