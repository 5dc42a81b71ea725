#pragma once

#include <vector>

#include "chull/groebner.hpp"

namespace chull {

/// Polynomials modulo a prime as supports and residues in [0, p), each
/// scaled so its first coefficient is 1.
struct ModularImage {
  std::vector<std::vector<Monomial>> support;
  std::vector<std::vector<Integer>> coef;
};

/// Generators of `ideal` modulo p, sorted by size and then by leading terms.
ModularImage modular_image(const Ideal& ideal, const Integer& p);

/// r/s with |r|, |s| <= sqrt(m/2) and r = a s mod m, if one exists.
bool rational_reconstruct(const Integer& a, const Integer& m, Rational& out);

/// Chinese remaindering of images modulo distinct primes followed by rational
/// reconstruction. Images whose supports disagree with the majority are
/// dropped.
class Lifter {
 public:
  /// Returns true once the current lift reproduces `image`, which it was not
  /// built from.
  bool add(const ModularImage& image, const Integer& p);

  /// The lifted polynomials, canonical; valid after add returned true.
  std::vector<Polynomial> result(const RingPtr& ring) const;

  unsigned primes_used() const { return used_; }

 private:
  void relift();

  ModularImage acc_;
  Integer modulus_ = 1;
  std::vector<std::vector<Rational>> lifted_;
  unsigned used_ = 0, mismatched_ = 0;
};

}  // namespace chull
