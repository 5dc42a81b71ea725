#pragma once

#include <array>
#include <vector>

#include "chull/groebner.hpp"
#include "chull/polynomial.hpp"

namespace chull {

/// Q[x0, x1], the parameter ring of every projective curve.
const RingPtr& binary_ring();

/// Trigonometric space curve: coordinate c is
/// constant[c] + sum_j cos[c][j-1] cos(j t) + sin[c][j-1] sin(j t), j = 1..m.
struct TrigCurveSpec {
  unsigned m = 0;
  std::array<Rational, 3> constant{};
  std::array<std::vector<Rational>, 3> cos, sin;
};

/// (F0 : F1 : F2 : F3), binary forms of a common degree without common factor.
class ProjectiveCurve {
 public:
  /// Validates homogeneity and equal degrees, then removes any common
  /// factor. Throws NotHomogeneous, DegreeMismatch, DegenerateSpec.
  static ProjectiveCurve from_forms(std::array<Polynomial, 4> forms);

  const std::array<Polynomial, 4>& forms() const { return forms_; }
  const Polynomial& form(std::size_t i) const { return forms_[i]; }
  int degree() const { return degree_; }

 private:
  std::array<Polynomial, 4> forms_;
  int degree_ = 0;
};

/// Rational parametrization of the circle, common denominator
/// (x0^2+x1^2)^m, then removal of the gcd of the four forms.
ProjectiveCurve to_projective(const TrigCurveSpec& spec);

/// gcd of the 2x2 minors of the Jacobian (dF_j/dx_i); constant for an
/// immersed parametrization.
Polynomial cusp_form(const ProjectiveCurve& c);
/// Number of distinct roots of cusp_form.
int cusp_count(const ProjectiveCurve& c);

/// Pencil Q1 + t Q2 of quadrics in the coordinates (1 : x : y : z).
struct QuadricPencilSpec {
  RationalMatrix q1, q2;
  /// Throws NotSymmetric, InvalidArgument (shape), DegeneratePencil.
  void validate() const;
};

}  // namespace chull
