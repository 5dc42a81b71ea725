#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chull/polynomial.hpp"

namespace chull {

/// Generator list over one ring. Zero generators are dropped.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }

  /// One canonical generator per line.
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

struct GroebnerProgress {
  std::size_t pairs_processed = 0;
  std::size_t pairs_pending = 0;
  std::size_t basis_size = 0;
  unsigned sugar = 0;
};

struct GroebnerOptions {
  /// Maximum number of S-pairs reduced before ResourceLimit; 0 = unlimited.
  std::size_t max_pairs = 0;
  /// Stop after all pairs of sugar degree <= max_degree (0 = no truncation).
  /// Only meaningful for weighted-homogeneous input.
  unsigned max_degree = 0;
  std::function<void(const GroebnerProgress&)> heartbeat;
  std::size_t heartbeat_every = 500;
  /// Work modulo this prime (below 2^62) instead of over Q; 0 = exact.
  std::uint64_t modulus = 0;
};

/// Reduced Groebner basis. Elements are primitive integer polynomials with
/// positive leading coefficient under the basis order, sorted by increasing
/// leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements);

  /// The ring carrying the order this basis was computed for.
  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }

  bool is_unit() const;
  /// Fully reduced remainder, over Q (monic-free: the true remainder).
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& i) const;

  /// Krull dimension of the affine quotient, from leading monomials (-1 for
  /// the unit ideal).
  int dimension() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> elems_;
};

/// Computes a reduced basis of `ideal` under `order` (the ideal's variables
/// are kept; only the order changes). Throws ResourceLimit.
GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order,
                             const GroebnerOptions& options = {});
/// Uses the ideal ring's own order.
GroebnerBasis groebner_basis(const Ideal& ideal, const GroebnerOptions& options = {});

/// Per-variable degree weights by name; unnamed variables weigh 1.
using WeightMap = std::map<std::string, unsigned, std::less<>>;

/// i intersected with the subring on the remaining variables, returned in
/// that subring (grevlex, original variable order).
Ideal eliminate(const Ideal& i, const std::vector<std::string>& drop,
                const GroebnerOptions& options = {}, const WeightMap& weights = {});

/// (i : f^infinity). Uses the reverse-lex trick when i is homogeneous and f
/// is a variable, and the Rabinowitsch variable otherwise.
Ideal saturate(const Ideal& i, const Polynomial& f, const GroebnerOptions& options = {},
               const WeightMap& weights = {});

enum class SaturationMode {
  Exact,
  /// Saturates by a random combination of the generators and accepts the
  /// result when a second independent combination agrees.
  FastPath,
};

/// (i : j^infinity) as the intersection of the saturations by the
/// generators of j.
Ideal saturate_by_ideal(const Ideal& i, const Ideal& j, const GroebnerOptions& options = {},
                        SaturationMode mode = SaturationMode::Exact, unsigned seed = 0);

Ideal intersect(const Ideal& i, const Ideal& j, const GroebnerOptions& options = {});

/// Minimal homogeneous generators (i must be homogeneous under the ring's
/// weights), chosen degree by degree from the reduced grevlex basis.
Ideal minimal_generators(const Ideal& i, const GroebnerOptions& options = {});

/// True when the two ideals are equal (compared through reduced bases).
bool same_ideal(const Ideal& a, const Ideal& b, const GroebnerOptions& options = {});

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Standard monomials of a zero-dimensional ideal.
class QuotientAlgebra {
 public:
  const GroebnerBasis& basis() const { return gb_; }
  const std::vector<Monomial>& monomials() const { return monos_; }
  std::size_t dimension() const { return monos_.size(); }

 private:
  friend QuotientAlgebra quotient_algebra(const GroebnerBasis& gb, std::size_t max_dimension);
  GroebnerBasis gb_;
  std::vector<Monomial> monos_;
};

/// Throws NotZeroDimensional when some variable has no pure-power leading
/// monomial or the basis would exceed max_dimension.
QuotientAlgebra quotient_algebra(const GroebnerBasis& gb, std::size_t max_dimension = 100000);

/// Matrix of multiplication by `var`: column j holds the normal form of
/// var * basis[j] in the standard-monomial basis.
RationalMatrix mult_matrix(const QuotientAlgebra& qa, std::string_view var);

}  // namespace chull
