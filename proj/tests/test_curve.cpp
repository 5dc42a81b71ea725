#include <cmath>
#include <random>

#include "chull/algebra.hpp"
#include "chull/curve.hpp"
#include "chull/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chull;
using chull::test::P;

namespace {

TrigCurveSpec running_curve() {
  TrigCurveSpec s;
  s.m = 3;
  s.cos[0] = {1, 0, 0};
  s.sin[1] = {0, 1, 0};
  s.cos[2] = {0, 0, 1};
  return s;
}

double trig_value(const TrigCurveSpec& s, std::size_t c, double t) {
  double v = s.constant[c].get_d();
  for (std::size_t j = 0; j < s.cos[c].size(); ++j) v += s.cos[c][j].get_d() * std::cos(double(j + 1) * t);
  for (std::size_t j = 0; j < s.sin[c].size(); ++j) v += s.sin[c][j].get_d() * std::sin(double(j + 1) * t);
  return v;
}

}  // namespace

TEST_CASE("running curve parametrization") {
  ProjectiveCurve c = to_projective(running_curve());
  auto r = binary_ring();
  CHECK(c.degree() == 6);
  CHECK(c.form(0) == P(r, "(x0^2+x1^2)^3"));
  CHECK(c.form(1) == P(r, "(x0^2-x1^2)*(x0^2+x1^2)^2"));
  CHECK(c.form(2) == P(r, "4*(x0^2-x1^2)*(x0^2+x1^2)*x0*x1"));
  CHECK(c.form(3) == P(r, "(x0^2-x1^2)*(x1^4-14*x1^2*x0^2+x0^4)"));
}

TEST_CASE("unit circle parametrization") {
  TrigCurveSpec s;
  s.m = 1;
  s.cos[0] = {1};
  s.sin[1] = {1};
  ProjectiveCurve c = to_projective(s);
  auto r = binary_ring();
  CHECK(c.degree() == 2);
  CHECK(c.form(0) == P(r, "x0^2+x1^2"));
  CHECK(c.form(1) == P(r, "x0^2-x1^2"));
  CHECK(c.form(2) == P(r, "2*x0*x1"));
  CHECK(c.form(3).is_zero());
}

TEST_CASE("invalid trigonometric specs") {
  TrigCurveSpec s;
  s.m = 2;
  s.cos[0] = {1, 0};
  CHECK_THROWS_AS(to_projective(s), Error);
  TrigCurveSpec z;
  CHECK_THROWS_AS(to_projective(z), Error);
  auto r = binary_ring();
  CHECK_THROWS_AS(ProjectiveCurve::from_forms({P(r, "x0^2"), P(r, "x0*x1"), P(r, "x1^3"), P(r, "0")}), Error);
  CHECK_THROWS_AS(ProjectiveCurve::from_forms({P(r, "x0^2"), P(r, "2*x0^2"), P(r, "0"), P(r, "0")}), Error);
}

TEST_CASE("common factors are removed") {
  auto r = binary_ring();
  ProjectiveCurve c = ProjectiveCurve::from_forms(
      {P(r, "x0^4"), P(r, "x0^3*x1"), P(r, "x0^2*x1^2"), P(r, "x0*x1^3")});
  CHECK(c.degree() == 3);
  CHECK(c.form(0) == P(r, "x0^3"));
  CHECK(c.form(3) == P(r, "x1^3"));
}

TEST_CASE("trigonometric parametrizations match numerically and are reduced") {
  std::mt19937 rng(83);
  std::uniform_int_distribution<int> coef(-6, 6);
  std::uniform_real_distribution<double> angle(0, 6.283185307179586);
  for (int k = 0; k < 12; ++k) {
    TrigCurveSpec s;
    s.m = 2 + unsigned(k % 3);
    for (std::size_t c = 0; c < 3; ++c) {
      s.constant[c] = Rational(coef(rng), 1 + k % 2);
      for (unsigned j = 0; j < s.m; ++j) {
        s.cos[c].push_back(Rational(coef(rng)));
        s.sin[c].push_back(Rational(coef(rng), 3));
      }
    }
    s.cos[0].back() = 1;
    ProjectiveCurve c = to_projective(s);
    Polynomial g(binary_ring());
    for (const auto& f : c.forms()) g = gcd(g, f);
    CHECK(g.is_constant());
    if (c.degree() == int(2 * s.m)) {
      // F0 is a positive multiple of a power of x0^2+x1^2.
      CHECK(c.form(0).canonical() == P(binary_ring(), "x0^2+x1^2").pow(s.m));
    }
    for (int a = 0; a < 20; ++a) {
      double t = angle(rng);
      double pt[2] = {std::cos(t / 2), std::sin(t / 2)};
      double f0 = c.form(0).evaluate(std::span<const double>(pt, 2));
      for (std::size_t i = 0; i < 3; ++i) {
        double v = c.form(i + 1).evaluate(std::span<const double>(pt, 2)) / f0;
        CHECK(std::abs(v - trig_value(s, i, t)) < 1e-12 * (1 + std::abs(v)));
      }
    }
  }
}

TEST_CASE("cusp detection") {
  auto r = binary_ring();
  ProjectiveCurve cubic = ProjectiveCurve::from_forms({P(r, "x0^3"), P(r, "x0^2*x1"), P(r, "x0*x1^2"), P(r, "x1^3")});
  CHECK(cusp_form(cubic).is_constant());
  CHECK(cusp_count(cubic) == 0);

  // Near (1:0) the map reads (1, t^2, t^3, t^4): a cusp at x1 = 0.
  ProjectiveCurve cusp = ProjectiveCurve::from_forms({P(r, "x0^4"), P(r, "x0^2*x1^2"), P(r, "x0*x1^3"), P(r, "x1^4")});
  Polynomial q;
  CHECK(try_exact_divide(cusp_form(cusp), P(r, "x1"), &q));
  CHECK(cusp_count(cusp) == 1);

  TrigCurveSpec quartic;
  quartic.m = 2;
  quartic.cos[0] = {1, 0};
  quartic.sin[1] = {1, 0};
  quartic.cos[1] = {0, 1};
  quartic.sin[2] = {0, 1};
  CHECK(cusp_count(to_projective(quartic)) == 0);
}

TEST_CASE("quadric pencil validation") {
  QuadricPencilSpec p;
  p.q1 = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
  p.q2 = {{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, -1}};
  CHECK_NOTHROW(p.validate());
  QuadricPencilSpec bad = p;
  bad.q1[0][1] = 1;
  CHECK_THROWS_AS(bad.validate(), Error);
  QuadricPencilSpec flat = p;
  flat.q1[3][3] = 0;
  flat.q2[3][3] = 0;
  CHECK_THROWS_AS(flat.validate(), Error);
}
