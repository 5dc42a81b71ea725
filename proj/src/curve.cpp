#include "chull/curve.hpp"

#include "chull/algebra.hpp"
#include "chull/error.hpp"
#include "chull/poly_matrix.hpp"

namespace chull {

const RingPtr& binary_ring() {
  static const RingPtr ring = Ring::make({"x0", "x1"});
  return ring;
}

ProjectiveCurve ProjectiveCurve::from_forms(std::array<Polynomial, 4> forms) {
  const RingPtr& ring = binary_ring();
  int d = -1;
  for (auto& f : forms) {
    if (!f.ring()) f = Polynomial(ring);
    f = f.to_ring(ring);
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "curve form " + f.to_string() + " is not homogeneous");
    if (d >= 0 && f.total_degree() != d) throw Error(ErrorCode::DegreeMismatch, "curve forms have different degrees");
    d = f.total_degree();
  }
  if (d < 0) throw Error(ErrorCode::DegenerateSpec, "all curve forms vanish");
  Polynomial g(ring);
  for (const auto& f : forms) g = gcd(g, f);
  if (!g.is_constant())
    for (auto& f : forms) f = exact_divide(f, g);
  ProjectiveCurve c;
  c.forms_ = std::move(forms);
  c.degree_ = d - (g.is_constant() ? 0 : g.total_degree());
  // A curve needs two independent forms.
  const Polynomial* base = nullptr;
  bool independent = false;
  for (const auto& f : c.forms_) {
    if (f.is_zero()) continue;
    if (!base) {
      base = &f;
      continue;
    }
    if (f.canonical() != base->canonical()) independent = true;
  }
  if (!independent || c.degree_ == 0) throw Error(ErrorCode::DegenerateSpec, "the parametrization is constant");
  return c;
}

ProjectiveCurve to_projective(const TrigCurveSpec& spec) {
  if (spec.m == 0) throw Error(ErrorCode::DegenerateSpec, "trigonometric degree must be positive");
  bool top = false;
  for (std::size_t c = 0; c < 3; ++c) {
    if (spec.cos[c].size() > spec.m || spec.sin[c].size() > spec.m)
      throw Error(ErrorCode::InvalidArgument, "more trigonometric coefficients than m");
    if (spec.cos[c].size() == spec.m && spec.cos[c].back() != 0) top = true;
    if (spec.sin[c].size() == spec.m && spec.sin[c].back() != 0) top = true;
  }
  if (!top) throw Error(ErrorCode::DegenerateSpec, "no coefficient of frequency m is nonzero");

  const RingPtr& ring = binary_ring();
  Polynomial n = parse_polynomial(ring, "x0^2+x1^2");
  Polynomial c1 = parse_polynomial(ring, "x0^2-x1^2");
  Polynomial s1 = parse_polynomial(ring, "2*x0*x1");
  // Numerators of cos(j t), sin(j t) over n^j, from the rotation power.
  std::vector<Polynomial> cj{Polynomial::constant(ring, 1)}, sj{Polynomial(ring)};
  for (unsigned j = 1; j <= spec.m; ++j) {
    cj.push_back(cj.back() * c1 - sj.back() * s1);
    sj.push_back(sj[j - 1] * c1 + cj[j - 1] * s1);
  }
  std::vector<Polynomial> npow{Polynomial::constant(ring, 1)};
  for (unsigned j = 1; j <= spec.m; ++j) npow.push_back(npow.back() * n);

  std::array<Polynomial, 4> forms;
  forms[0] = npow[spec.m];
  for (std::size_t c = 0; c < 3; ++c) {
    Polynomial f = spec.constant[c] * npow[spec.m];
    for (unsigned j = 1; j <= spec.m; ++j) {
      Rational a = j <= spec.cos[c].size() ? spec.cos[c][j - 1] : Rational(0);
      Rational b = j <= spec.sin[c].size() ? spec.sin[c][j - 1] : Rational(0);
      if (a == 0 && b == 0) continue;
      f += (a * cj[j] + b * sj[j]) * npow[spec.m - j];
    }
    forms[c + 1] = f;
  }
  return ProjectiveCurve::from_forms(std::move(forms));
}

Polynomial cusp_form(const ProjectiveCurve& c) {
  std::array<Polynomial, 4> d0, d1;
  for (std::size_t j = 0; j < 4; ++j) {
    d0[j] = c.form(j).derivative(0);
    d1[j] = c.form(j).derivative(1);
  }
  Polynomial g(binary_ring());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      g = gcd(g, d0[i] * d1[j] - d0[j] * d1[i]);
      if (g.is_constant() && !g.is_zero()) return g;
    }
  return g;
}

int cusp_count(const ProjectiveCurve& c) {
  Polynomial f = cusp_form(c);
  if (f.is_zero()) throw Error(ErrorCode::DegenerateSpec, "the Jacobian minors vanish identically");
  if (f.is_constant()) return 0;
  return squarefree_part(f).total_degree();
}

void QuadricPencilSpec::validate() const {
  for (const auto* q : {&q1, &q2}) {
    if (q->size() != 4) throw Error(ErrorCode::InvalidArgument, "quadric matrices must be 4x4");
    for (const auto& row : *q)
      if (row.size() != 4) throw Error(ErrorCode::InvalidArgument, "quadric matrices must be 4x4");
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if ((*q)[i][j] != (*q)[j][i]) throw Error(ErrorCode::NotSymmetric, "quadric matrix is not symmetric");
  }
  auto r = Ring::make({"t"});
  PolyMatrix m(r, 4, 4);
  Polynomial t = Polynomial::variable(r, 0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = Polynomial::constant(r, q1[i][j]) + q2[i][j] * t;
  if (determinant(m).is_zero()) throw Error(ErrorCode::DegeneratePencil, "det(Q1 + t Q2) vanishes identically");
}

}  // namespace chull
