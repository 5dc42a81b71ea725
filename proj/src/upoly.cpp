#include "chull/upoly.hpp"

#include <algorithm>

#include "chull/error.hpp"

namespace chull {

UPoly UPoly::monomial(std::size_t power, const Integer& c) {
  std::vector<Integer> v(power + 1);
  v[power] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(v[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const Integer& k) {
  if (k == 0) return {};
  UPoly r = a;
  for (auto& x : r.c_) x *= k;
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Integer(static_cast<unsigned long>(i));
  return UPoly(std::move(v));
}

Integer UPoly::content() const {
  Integer g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  Integer g = content();
  if (lead() < 0) g = -g;
  UPoly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}

Integer UPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

bool UPoly::divides_exactly(const UPoly& a, const UPoly& b, UPoly* quotient) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  if (a.is_zero()) {
    if (quotient) *quotient = UPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<Integer> r = a.c_;
  std::vector<Integer> q(a.c_.size() - b.c_.size() + 1);
  const Integer& lb = b.lead();
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = r[k + b.c_.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    Integer t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), b.c_[j].get_mpz_t());
    q[k] = t;
  }
  for (std::size_t i = 0; i + 1 < b.c_.size() && i < r.size(); ++i)
    if (r[i] != 0) return false;
  if (quotient) *quotient = UPoly(std::move(q));
  return true;
}

UPoly UPoly::pseudo_remainder(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "pseudo-remainder by zero");
  std::vector<Integer> r = a.c_;
  int db = b.degree();
  const Integer& lb = b.lead();
  int e = a.degree() - db + 1;
  while (int(r.size()) - 1 >= db && !r.empty()) {
    Integer t = r.back();
    std::size_t shift = r.size() - 1 - db;
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_submul(r[shift + j].get_mpz_t(), t.get_mpz_t(), b.c_[j].get_mpz_t());
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    --e;
  }
  UPoly rem(std::move(r));
  if (e > 0) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    rem = rem * f;
  }
  return rem;
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  UPoly x = a.primitive(), y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    UPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive();
  }
  return x.primitive();
}

namespace {

// Divides both a and b by the same polynomial g (exact over Q), scaling both
// by one integer so the quotients stay integral and mutually consistent.
void divide_pair(UPoly& a, UPoly& b, const UPoly& g) {
  int e = std::max(a.degree(), b.degree()) - g.degree() + 1;
  Integer s;
  mpz_pow_ui(s.get_mpz_t(), g.lead().get_mpz_t(), static_cast<unsigned long>(std::max(e, 0)));
  UPoly qa, qb;
  if (!UPoly::divides_exactly(a * s, g, &qa) || !UPoly::divides_exactly(b * s, g, &qb))
    throw Error(ErrorCode::NotDivisible, "squarefree decomposition step");
  Integer common;
  mpz_gcd(common.get_mpz_t(), qa.content().get_mpz_t(), qb.content().get_mpz_t());
  if (common > 1) {
    UPoly k = UPoly::constant(common);
    UPoly::divides_exactly(qa, k, &qa);
    UPoly::divides_exactly(qb, k, &qb);
  }
  a = std::move(qa);
  b = std::move(qb);
}

}  // namespace

std::vector<UPoly> UPoly::squarefree_decomposition() const {
  std::vector<UPoly> out;
  if (degree() <= 0) return out;
  UPoly b = primitive();
  UPoly c = b.derivative();
  UPoly a = gcd(b, c);
  divide_pair(b, c, a);
  while (b.degree() > 0) {
    UPoly d = c - b.derivative();
    UPoly g = gcd(b, d);
    out.push_back(g.degree() > 0 ? g : UPoly::constant(1));
    divide_pair(b, d, g);
    c = std::move(d);
  }
  while (!out.empty() && out.back().degree() <= 0) out.pop_back();
  return out;
}

UPoly UPoly::from_polynomial(const Polynomial& p, std::size_t var) {
  Rational k = p.integer_normalizer();
  std::vector<Integer> v(std::max(0, p.degree(var)) + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    unsigned e = m.exp[var];
    m.exp[var] = 0;
    if (!m.is_one()) throw Error(ErrorCode::InvalidArgument, "polynomial is not univariate");
    Rational c = t.coeff * k;
    v[e] = c.get_num();
  }
  return UPoly(std::move(v));
}

Polynomial UPoly::to_polynomial(const RingPtr& ring, std::size_t var) const {
  std::vector<Polynomial::Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) terms.push_back({Monomial::variable(var, static_cast<unsigned>(i)), Rational(c_[i])});
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace chull
