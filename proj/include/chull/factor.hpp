#pragma once

#include <utility>
#include <vector>

#include "chull/polynomial.hpp"
#include "chull/upoly.hpp"

namespace chull {

/// unit * prod factor^multiplicity. Factors are canonical (primitive,
/// positive grevlex leading coefficient) and sorted by degree, then text.
struct Factorization {
  Rational unit = 1;
  std::vector<std::pair<Polynomial, unsigned>> factors;

  Polynomial expand(const RingPtr& ring) const;
};

/// Irreducible factorization over Q of a polynomial in one variable.
/// Throws DegreeCapExceeded above `degree_cap`.
Factorization factor_univariate(const Polynomial& f, unsigned degree_cap = 128);

/// Irreducible factorization over Q of a form involving at most three
/// variables. Throws NotHomogeneous and DegreeCapExceeded.
Factorization factor_homogeneous(const Polynomial& f, unsigned degree_cap = 12);

/// Irreducible factors over Z of a primitive squarefree polynomial with
/// positive leading coefficient (Zassenhaus).
std::vector<UPoly> factor_squarefree(const UPoly& f);

}  // namespace chull
