#include "chull/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include "chull/error.hpp"

namespace chull {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() == b.ring()) return;
  if (!a.ring() || !b.ring() || !(*a.ring() == *b.ring()))
    throw Error(ErrorCode::RingMismatch, "operands live in different rings");
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->num_vars()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  return monomial(std::move(ring), Monomial::variable(index), 1);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto i = ring->index_of(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  p.normalize_sorted();
  return p;
}

void Polynomial::normalize_sorted() {
  const Ring& r = *ring_;
  std::sort(terms_.begin(), terms_.end(),
            [&r](const Term& x, const Term& y) { return r.compare(x.mono, y.mono) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i + 1;
    Rational sum = terms_[i].coeff;
    while (j < terms_.size() && terms_[j].mono == terms_[i].mono) sum += terms_[j++].coeff;
    if (sum != 0) {
      terms_[out].mono = terms_[i].mono;
      terms_[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  for (const auto& t : terms_)
    if (t.mono.is_one()) return t.coeff;
  return 0;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, int(t.mono.total_degree()));
  return d;
}

int Polynomial::degree(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, int(t.mono[var]));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.front().mono.total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.mono.total_degree() == d; });
}

bool Polynomial::is_weighted_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = ring_->weighted_degree(terms_.front().mono);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return ring_->weighted_degree(t.mono) == d; });
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] > 0; });
}

std::uint32_t Polynomial::support() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_) m |= t.mono.support_mask();
  return m;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

template <class Combine>
std::vector<Polynomial::Term> merge_terms(const Ring& ring, const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b, Combine combine,
                                          bool negate_b) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (negate_b) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational s = combine(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) {
    out.push_back(b[j++]);
    if (negate_b) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (!ring_) ring_ = o.ring_;
  require_same_ring(*this, o);
  terms_ = merge_terms(*ring_, terms_, o.terms_,
                       [](const Rational& x, const Rational& y) { return Rational(x + y); }, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (!ring_) ring_ = o.ring_;
  require_same_ring(*this, o);
  terms_ = merge_terms(*ring_, terms_, o.terms_,
                       [](const Rational& x, const Rational& y) { return Rational(x - y); }, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) out.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
  return Polynomial::from_terms(a.ring_, std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves any monomial order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_) {
    if (!a.ring_ || !b.ring_) return a.is_zero() && b.is_zero();
    if (!a.ring_->same_variables(*b.ring_)) return false;
    if (!(a.ring_->order() == b.ring_->order())) return a.to_ring(b.ring_) == b;
  }
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    Monomial m = t.mono;
    unsigned e = m.exp[var];
    m.exp[var] = static_cast<std::uint8_t>(e - 1);
    out.push_back({m, t.coeff * e});
  }
  // Lowering one exponent can reorder terms under weighted/elimination orders.
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::substitute(const RingPtr& target, std::span<const Polynomial> images) const {
  if (images.size() != ring_->num_vars())
    throw Error(ErrorCode::InvalidArgument, "substitution needs one image per variable");
  std::map<std::pair<std::size_t, unsigned>, Polynomial> cache;
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(i, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Polynomial v = e == 1 ? images[i] : images[i].pow(e);
    return cache.emplace(key, std::move(v)).first->second;
  };
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (std::size_t i = 0; i < ring_->num_vars(); ++i)
      if (t.mono[i]) prod = prod * power(i, t.mono[i]);
    for (auto& pt : prod.terms_) acc.push_back(std::move(pt));
  }
  return from_terms(target, std::move(acc));
}

Polynomial Polynomial::to_ring(const RingPtr& target) const {
  std::vector<int> map(ring_->num_vars(), -1);
  std::uint32_t used = support();
  for (std::size_t i = 0; i < ring_->num_vars(); ++i) {
    auto j = target->find(ring_->name(i));
    if (j) {
      map[i] = int(*j);
    } else if (used & (1u << i)) {
      throw Error(ErrorCode::RingMismatch, "variable " + ring_->name(i) + " missing in target ring");
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_->num_vars(); ++i)
      if (t.mono[i]) m.exp[map[i]] = t.mono.exp[i];
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring_->num_vars(); ++i)
    images.push_back(i == var ? value : variable(ring_, i));
  return substitute(ring_, images);
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < ring_->num_vars(); ++i) {
      for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> point) const {
  double sum = 0;
  for (const auto& t : terms_) {
    double v = t.coeff.get_d();
    for (std::size_t i = 0; i < ring_->num_vars(); ++i)
      if (t.mono[i]) v *= std::pow(point[i], int(t.mono[i]));
    sum += v;
  }
  return sum;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  int d = degree(var);
  std::vector<std::vector<Term>> buckets(d < 0 ? 0 : std::size_t(d) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    unsigned e = m.exp[var];
    m.exp[var] = 0;
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(ring_, std::move(b)));
  return out;
}

Rational Polynomial::integer_normalizer() const {
  if (terms_.empty()) return 1;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational r(den_lcm, num_gcd);
  r.canonicalize();
  return r;
}

const Polynomial::Term& Polynomial::grevlex_leading_term() const {
  if (ring_->order() == MonomialOrder::grevlex() || terms_.size() == 1) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (ring_->compare_grevlex(t.mono, best->mono) > 0) best = &t;
  return *best;
}

Polynomial Polynomial::canonical() const {
  if (terms_.empty()) return *this;
  Rational k = integer_normalizer();
  if (grevlex_leading_term().coeff < 0) k = -k;
  return *this * k;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / leading_coeff();
  return *this * inv;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  const Ring& r = *ring_;
  std::sort(order.begin(), order.end(),
            [&r](const Term* x, const Term* y) { return r.compare_grevlex(x->mono, y->mono) > 0; });
  std::string out;
  bool first = true;
  for (const Term* t : order) {
    bool negative = t->coeff < 0;
    Rational mag = abs(t->coeff);
    if (negative) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < r.num_vars(); ++i) {
      unsigned e = t->mono[i];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += r.name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += chull::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += chull::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      unsigned long e = integer_literal_ulong();
      if (e > 255) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  unsigned long integer_literal_ulong() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  Integer integer_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer_literal();
      Integer den = 1;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        den = integer_literal();
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->find(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return Parser(ring, text).parse();
}

std::vector<std::string> scan_variables(std::string_view text) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      std::string name(text.substr(start, i - start));
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  return names;
}

}  // namespace chull
