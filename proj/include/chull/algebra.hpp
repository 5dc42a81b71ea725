#pragma once

#include <string_view>

#include "chull/polynomial.hpp"

namespace chull {

/// q with f = q*g. Throws NotDivisible when the remainder is nonzero.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// Like exact_divide but reports failure instead of throwing.
bool try_exact_divide(const Polynomial& f, const Polynomial& g, Polynomial* quotient);

/// Greatest common divisor over Q, normalized to integer content 1 with a
/// positive grevlex leading coefficient. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

/// Content of f viewed as a polynomial in `var` (gcd of its coefficients).
Polynomial content_in(const Polynomial& f, std::size_t var);

/// Product of the distinct irreducible factors of f, canonical form.
Polynomial squarefree_part(const Polynomial& f);

/// Resultant with respect to `var`, via the Sylvester determinant. Both
/// inputs need positive degree in var (DegreeZero otherwise).
Polynomial resultant(const Polynomial& f, const Polynomial& g, std::size_t var);
Polynomial resultant(const Polynomial& f, const Polynomial& g, std::string_view var);

/// Multivariate pseudo-remainder of f by g with respect to `var`.
Polynomial pseudo_remainder(const Polynomial& f, const Polynomial& g, std::size_t var);

}  // namespace chull
