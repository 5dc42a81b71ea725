#include "chull/ring.hpp"

#include <algorithm>
#include <set>

#include "chull/error.hpp"

namespace chull {

Monomial Monomial::variable(std::size_t i, unsigned power) {
  if (power > 255) throw Error(ErrorCode::ExponentOverflow, "exponent above 255");
  Monomial m;
  m.exp[i] = static_cast<std::uint8_t>(power);
  return m;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i]) mask |= (1u << i);
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(exp[i]) + other.exp[i];
    if (s > 255) throw Error(ErrorCode::ExponentOverflow, "monomial exponent above 255");
    r.exp[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(exp[i] - other.exp[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(exp[i], other.exp[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::min(exp[i], other.exp[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] && other.exp[i]) return false;
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exp) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

Ring::Ring(std::vector<std::string> variables, MonomialOrder order)
    : variables_(std::move(variables)), order_(std::move(order)) {}

RingPtr Ring::make(std::vector<std::string> variables, MonomialOrder order) {
  if (variables.size() > kMaxVars)
    throw Error(ErrorCode::InvalidArgument, "at most 16 variables are supported");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw Error(ErrorCode::InvalidArgument, "empty variable name");
    if (!seen.insert(v).second) throw Error(ErrorCode::InvalidArgument, "duplicate variable " + v);
  }
  if (order.kind == OrderKind::Elimination && order.split > variables.size())
    throw Error(ErrorCode::InvalidArgument, "elimination split out of range");
  if (!order.weights.empty() && order.weights.size() != variables.size())
    throw Error(ErrorCode::InvalidArgument, "weight vector length mismatch");
  for (auto w : order.weights)
    if (w == 0) throw Error(ErrorCode::InvalidArgument, "weights must be positive");
  return RingPtr(new Ring(std::move(variables), std::move(order)));
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

std::size_t Ring::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) throw Error(ErrorCode::InvalidArgument, "unknown variable " + std::string(name));
  return *i;
}

unsigned Ring::weighted_degree(const Monomial& m) const {
  unsigned d = 0;
  for (std::size_t i = 0; i < variables_.size(); ++i) d += weight(i) * m.exp[i];
  return d;
}

int Ring::grevlex_block(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
                        bool weighted) const {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    unsigned w = weighted ? weight(i) : 1;
    da += w * a.exp[i];
    db += w * b.exp[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = variables_.size();
  switch (order_.kind) {
    case OrderKind::GRevLex:
      return grevlex_block(a, b, 0, n, true);
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
      return 0;
    case OrderKind::Elimination: {
      int c = grevlex_block(a, b, 0, order_.split, true);
      if (c) return c;
      return grevlex_block(a, b, order_.split, n, true);
    }
  }
  return 0;
}

int Ring::compare_grevlex(const Monomial& a, const Monomial& b) const {
  return grevlex_block(a, b, 0, variables_.size(), false);
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(variables_, std::move(order)); }

}  // namespace chull
