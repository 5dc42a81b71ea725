#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chull {

inline constexpr std::size_t kMaxVars = 16;

/// Dense exponent vector over at most kMaxVars variables. Exponents are
/// capped at 255; products that would overflow throw ExponentOverflow.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};

  static Monomial variable(std::size_t i, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exp[i]; }
  unsigned total_degree() const;
  bool is_one() const;

  /// Bit i is set iff variable i occurs. Used as a divisibility prefilter.
  std::uint32_t support_mask() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other, *this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exp != b.exp; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

enum class OrderKind {
  GRevLex,
  Lex,
  /// Block order: weighted grevlex on variables [0, split), ties broken by
  /// weighted grevlex on [split, n). Eliminates the first block.
  Elimination,
};

struct MonomialOrder {
  OrderKind kind = OrderKind::GRevLex;
  std::size_t split = 0;
  /// Per-variable degree weights; empty means all ones.
  std::vector<unsigned> weights;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0, {}}; }
  static MonomialOrder elimination(std::size_t split, std::vector<unsigned> weights = {}) {
    return {OrderKind::Elimination, split, std::move(weights)};
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Named variables plus a monomial order. Rings are immutable and shared.
class Ring {
 public:
  static RingPtr make(std::vector<std::string> variables,
                      MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t num_vars() const { return variables_.size(); }
  const MonomialOrder& order() const { return order_; }
  const std::string& name(std::size_t i) const { return variables_[i]; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws InvalidArgument for unknown names.
  std::size_t index_of(std::string_view name) const;

  unsigned weight(std::size_t i) const { return order_.weights.empty() ? 1 : order_.weights[i]; }
  unsigned weighted_degree(const Monomial& m) const;

  /// Three-way comparison under this ring's order: >0 when a is larger.
  int compare(const Monomial& a, const Monomial& b) const;
  /// Plain (unweighted) grevlex over all variables; used for canonical output.
  int compare_grevlex(const Monomial& a, const Monomial& b) const;

  RingPtr with_order(MonomialOrder order) const;

  /// Same variable list (order may differ).
  bool same_variables(const Ring& other) const { return variables_ == other.variables_; }
  bool operator==(const Ring& other) const {
    return variables_ == other.variables_ && order_ == other.order_;
  }

 private:
  Ring(std::vector<std::string> variables, MonomialOrder order);

  int grevlex_block(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
                    bool weighted) const;

  std::vector<std::string> variables_;
  MonomialOrder order_;
};

}  // namespace chull
