#include <cmath>
#include <random>

#include "chull/algebra.hpp"
#include "chull/edgesurface.hpp"
#include "chull/error.hpp"
#include "chull/factor.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chull;
using chull::test::P;

namespace {

TrigCurveSpec quartic_spec() {
  TrigCurveSpec s;
  s.m = 2;
  s.cos[0] = {1, 0};
  s.sin[1] = {1, 0};
  s.cos[1] = {0, 1};
  s.sin[2] = {0, 1};
  return s;
}

TrigCurveSpec running_spec() {
  TrigCurveSpec s;
  s.m = 3;
  s.cos[0] = {1, 0, 0};
  s.sin[1] = {0, 1, 0};
  s.cos[2] = {0, 0, 1};
  return s;
}

ProjectiveCurve random_curve(std::mt19937& rng, unsigned d) {
  auto r = binary_ring();
  for (;;) {
    std::array<Polynomial, 4> f;
    for (auto& g : f) g = chull::test::random_binary_form(r, rng, d);
    try {
      ProjectiveCurve c = ProjectiveCurve::from_forms(f);
      if (c.degree() == int(d)) return c;
    } catch (const Error&) {
    }
  }
}

std::array<double, 3> affine_point(const ProjectiveCurve& c, double s) {
  double pt[2] = {1, s};
  double f0 = c.form(0).evaluate(std::span<const double>(pt, 2));
  std::array<double, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = c.form(i + 1).evaluate(std::span<const double>(pt, 2)) / f0;
  return out;
}

// |f(p)| divided by the sum of the absolute values of its terms at p.
double relative_residual(const Polynomial& f, const std::array<double, 3>& p) {
  double value = 0, scale = 0;
  for (const auto& t : f.terms()) {
    double m = t.coeff.get_d();
    for (std::size_t v = 0; v < 3; ++v) m *= std::pow(p[v], double(t.mono[v]));
    value += m;
    scale += std::abs(m);
  }
  return std::abs(value) / std::max(scale, 1e-300);
}

// Real roots of a univariate polynomial on [lo, hi] by sign scan and bisection.
std::vector<double> real_roots(const Polynomial& f, double lo, double hi, int steps = 4000) {
  std::vector<double> roots;
  auto eval = [&](double t) { return f.evaluate(std::span<const double>(&t, 1)); };
  double prev = eval(lo);
  for (int k = 1; k <= steps; ++k) {
    double t = lo + (hi - lo) * k / steps, v = eval(t);
    if ((prev < 0) != (v < 0)) {
      double a = t - (hi - lo) / steps, b = t;
      for (int it = 0; it < 200; ++it) {
        double mid = (a + b) / 2;
        if ((eval(a) < 0) == (eval(mid) < 0)) a = mid;
        else b = mid;
      }
      roots.push_back((a + b) / 2);
    }
    prev = v;
  }
  return roots;
}

}  // namespace

TEST_CASE("symmetrize examples") {
  auto r = pair_ring();
  auto inv = invariant_ring();
  CHECK(symmetrize(P(r, "xp0*xq0")) == P(inv, "a"));
  CHECK(symmetrize(P(r, "xp0^2*xq1^2+xp1^2*xq0^2")) == P(inv, "c^2-2*a*b"));
  CHECK_THROWS_AS(symmetrize(P(r, "xp0*xq1")), Error);
  CHECK_THROWS_AS(symmetrize(P(r, "xp0^2*xq0+xp0*xq0^2")), Error);
  try {
    symmetrize(P(r, "xp0*xq1-xp1*xq0"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSymmetric);
  }
}

TEST_CASE("symmetrize inverts substitution of the invariants") {
  std::mt19937 rng(89);
  auto r = pair_ring();
  auto inv = invariant_ring();
  std::array<Polynomial, 3> img{P(r, "xp0*xq0"), P(r, "xp1*xq1"), P(r, "xp0*xq1+xp1*xq0")};
  for (int k = 0; k < 20; ++k) {
    unsigned m = 1 + unsigned(k % 5);
    std::vector<Polynomial::Term> terms;
    std::uniform_int_distribution<int> c(-7, 7);
    for (unsigned i = 0; i <= m; ++i)
      for (unsigned j = 0; i + j <= m; ++j) {
        Monomial mono;
        mono.exp[0] = std::uint8_t(i);
        mono.exp[1] = std::uint8_t(j);
        mono.exp[2] = std::uint8_t(m - i - j);
        terms.push_back({mono, Rational(c(rng))});
      }
    Polynomial g = Polynomial::from_terms(inv, terms);
    CHECK(symmetrize(g.substitute(r, img)) == g);
  }
}

TEST_CASE("secant coordinates of the quartic example") {
  auto inv = invariant_ring();
  SecantCoordinates sc = secant_coordinates(to_projective(quartic_spec()));
  std::array<Polynomial, 6> reference{
      P(inv, "-a^2*c-c^3+2*a*b*c-b^2*c"),
      P(inv, "a^3-4*a^2*c+a*c^2-3*a^2*b+3*a*b^2-b^3+4*b^2*c-b*c^2"),
      P(inv, "2*a^3-2*a*c^2-2*a^2*b-2*a*b^2+2*b^3-2*b*c^2"),
      P(inv, "a^3-3*a^2*c+c^2*a+c^3-a^2*b-a*b^2-2*c*a*b+b^3-3*b^2*c+b*c^2"),
      P(inv, "2*a^3-2*a*c^2+2*a^2*b-2*a*b^2-2*b^3+2*b*c^2"),
      P(inv, "2*a^3-2*a*c^2+14*a^2*b+14*a*b^2-8*a*b*c+2*b^3-2*b*c^2"),
  };
  // One common scalar relates the two sets of coordinates.
  Rational ratio = sc.u[0].leading_coeff() / reference[0].leading_coeff();
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(sc.u[k].canonical() == reference[k].canonical());
    CHECK(sc.u[k] == ratio * reference[k]);
    CHECK(sc.u[k].total_degree() == 3);
  }
  CHECK(sc.plucker().is_zero());
}

TEST_CASE("secant coordinates of the unit circle") {
  TrigCurveSpec s;
  s.m = 1;
  s.cos[0] = {1};
  s.sin[1] = {1};
  auto inv = invariant_ring();
  SecantCoordinates sc = secant_coordinates(to_projective(s));
  CHECK(sc.u[0] == P(inv, "-2*c"));
  CHECK(sc.u[1] == P(inv, "2*a-2*b"));
  CHECK(sc.u[2].is_zero());
  CHECK(sc.u[3] == P(inv, "2*a+2*b"));
  CHECK(sc.u[4].is_zero());
  CHECK(sc.u[5].is_zero());
  CHECK(sc.plucker().is_zero());
  CHECK_THROWS_AS(stationary_form(to_projective(s)), Error);
}

TEST_CASE("Pluecker relation and degrees on random curves") {
  std::mt19937 rng(97);
  for (unsigned d = 4; d <= 6; ++d)
    for (int k = 0; k < 3; ++k) {
      ProjectiveCurve c = random_curve(rng, d);
      SecantCoordinates sc = secant_coordinates(c);
      CHECK(sc.plucker().is_zero());
      for (const auto& u : sc.u) {
        CHECK(u.is_homogeneous());
        CHECK(u.total_degree() == int(d) - 1);
      }
      CHECK(stationary_form(c).total_degree() == 2 * (int(d) - 3));
    }
}

TEST_CASE("stationary form examples") {
  auto inv = invariant_ring();
  CHECK(stationary_form(to_projective(quartic_spec())) == P(inv, "a^2-2*a*b+4*a*c+b^2+4*b*c-c^2"));
  Polynomial phi = stationary_form(to_projective(running_spec()));
  CHECK(phi == P(inv, "(a-b)*c*(3*a^4-6*a^2*b^2+2*a^2*c^2+3*b^4+2*b^2*c^2-c^4)").canonical());
  Factorization fz = factor_homogeneous(phi);
  REQUIRE(fz.factors.size() == 3);
  CHECK(fz.factors[0].first == P(inv, "a-b"));
  CHECK(fz.factors[1].first == P(inv, "c"));
}

TEST_CASE("edge surface of the quartic example, both routes") {
  ProjectiveCurve c = to_projective(quartic_spec());
  Polynomial expected = P(space_ring(), chull::test::golden("quartic_edge6.txt"));
  for (EdgeRoute route : {EdgeRoute::Grassmannian, EdgeRoute::Direct}) {
    EdgeOptions o;
    o.route = route;
    auto comps = edge_components(c, o);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].status == ComponentStatus::Done);
    CHECK(comps[0].degree == 6);
    CHECK(comps[0].reduced);
    CHECK(comps[0].surface == expected);
  }
}

TEST_CASE("modular lifting reproduces the exact edge surfaces") {
  ProjectiveCurve quartic = to_projective(quartic_spec());
  Polynomial expected = P(space_ring(), chull::test::golden("quartic_edge6.txt"));
  for (EdgeRoute route : {EdgeRoute::Grassmannian, EdgeRoute::Direct}) {
    EdgeOptions o;
    o.route = route;
    o.modular = true;
    auto comps = edge_components(quartic, o);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].status == ComponentStatus::Done);
    CHECK(comps[0].surface == expected);
  }
  SecantCoordinates sc = secant_coordinates(to_projective(running_spec()));
  EdgeOptions o;
  o.modular = true;
  CHECK(edge_component(sc, P(invariant_ring(), "a-b"), o).surface == P(space_ring(), "x^2-y^2-x*z").canonical());
  CHECK(edge_component(sc, P(invariant_ring(), "c"), o).surface == P(space_ring(), "z-4*x^3+3*x").canonical());
  o.max_primes = 1;
  CHECK(edge_component(sc, P(invariant_ring(), "c"), o).status == ComponentStatus::ResourceLimit);
}

TEST_CASE("interpolation reproduces the eliminated edge surfaces") {
  EdgeOptions o;
  o.route = EdgeRoute::Interpolation;
  auto quartic = edge_components(to_projective(quartic_spec()), o);
  REQUIRE(quartic.size() == 1);
  CHECK(quartic[0].surface == P(space_ring(), chull::test::golden("quartic_edge6.txt")));
  auto running = edge_components(to_projective(running_spec()), o);
  REQUIRE(running.size() == 3);
  CHECK(running[0].surface == P(space_ring(), "x^2-y^2-x*z").canonical());
  CHECK(running[1].surface == P(space_ring(), "z-4*x^3+3*x").canonical());
  CHECK(running[2].surface == P(space_ring(), chull::test::golden("running_edge16.txt")));
  for (const auto& c : running) CHECK(c.status == ComponentStatus::Done);
}

TEST_CASE("interpolation sees only the reduced surface") {
  auto r = binary_ring();
  ProjectiveCurve c = ProjectiveCurve::from_forms(
      {P(r, "x0^6-2*x0*x1^5"), P(r, "2*x0^5*x1+x1^6"), P(r, "x0^4*x1^2"), P(r, "x0^2*x1^4")});
  EdgeOptions o;
  o.route = EdgeRoute::Interpolation;
  auto interp = edge_components(c, o);
  auto exact = edge_components(c);
  REQUIRE(interp.size() == exact.size());
  for (std::size_t i = 0; i < exact.size(); ++i) {
    CHECK(interp[i].surface == exact[i].surface);
    CHECK(interp[i].degree == exact[i].degree);
    CHECK(interp[i].reduced);
  }
}

TEST_CASE("image of the stationary curve is cut out by eight quadrics") {
  ProjectiveCurve c = to_projective(quartic_spec());
  SecantCoordinates sc = secant_coordinates(c);
  Ideal image = grassmannian_image(sc, stationary_form(c));
  Ideal mins = minimal_generators(image);
  CHECK(mins.size() == 8);
  for (const auto& g : mins.generators()) CHECK(g.total_degree() == 2);
  // The Pluecker quadric is one of the relations.
  GroebnerBasis gb = groebner_basis(image);
  CHECK(gb.contains(P(plucker_ring(), "u01*u23-u02*u13+u03*u12")));
}

TEST_CASE("routes agree on the low-degree factors of the running curve") {
  ProjectiveCurve c = to_projective(running_spec());
  SecantCoordinates sc = secant_coordinates(c);
  auto inv = invariant_ring();
  auto xyz = space_ring();
  const std::pair<const char*, const char*> cases[] = {{"a-b", "x^2-y^2-x*z"}, {"c", "z-4*x^3+3*x"}};
  for (const auto& [phi, surface] : cases) {
    EdgeOptions g, d;
    d.route = EdgeRoute::Direct;
    EdgeComponent cg = edge_component(sc, P(inv, phi), g);
    EdgeComponent cd = edge_component(sc, P(inv, phi), d);
    CHECK(cg.surface == cd.surface);
    CHECK(cg.surface == P(xyz, surface).canonical());
  }
}

TEST_CASE("a non-reduced edge structure collapses to degree ten") {
  auto r = binary_ring();
  ProjectiveCurve c = ProjectiveCurve::from_forms(
      {P(r, "x0^6-2*x0*x1^5"), P(r, "2*x0^5*x1+x1^6"), P(r, "x0^4*x1^2"), P(r, "x0^2*x1^4")});
  auto comps = edge_components(c);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].degree == 10);
  std::string text = comps[0].surface.to_string();
  CHECK(text.starts_with("27*x^5*y^5+3125*y^10-1875*x^2*y^7*z"));
  CHECK(text.ends_with("+27*z^5-16*y^3*z"));
}

TEST_CASE("edge degree of random smooth quartics") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> coef(-4, 4);
  int checked = 0;
  for (int k = 0; k < 6 && checked < 3; ++k) {
    TrigCurveSpec s;
    s.m = 2;
    for (std::size_t c = 0; c < 3; ++c) {
      s.constant[c] = coef(rng);
      s.cos[c] = {coef(rng), coef(rng)};
      s.sin[c] = {coef(rng), coef(rng)};
    }
    ProjectiveCurve c = to_projective(s);
    if (c.degree() != 4 || cusp_count(c) != 0) continue;
    auto comps = edge_components(c);
    int total = 0;
    for (const auto& comp : comps) total += comp.degree;
    CHECK(total == 6);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("segments of stationary bisecants lie on the edge surface") {
  ProjectiveCurve c = to_projective(quartic_spec());
  Polynomial phi = stationary_form(c);
  Polynomial surface = edge_components(c)[0].surface;
  auto t_ring = Ring::make({"t"});
  std::mt19937 rng(103);
  std::uniform_real_distribution<double> param(-3, 3), lambda(0, 1);
  int samples = 0;
  while (samples < 50) {
    double s = param(rng);
    // p = (1 : s), q = (1 : t): a = 1, b = s t, c = s + t.
    Rational sr(static_cast<long>(std::lround(s * 1000)), 1000);
    std::array<Polynomial, 3> img{Polynomial::constant(t_ring, 1), sr * P(t_ring, "t"),
                                  Polynomial::constant(t_ring, sr) + P(t_ring, "t")};
    Polynomial f = phi.substitute(t_ring, img);
    for (double t : real_roots(f, -40, 40)) {
      auto p = affine_point(c, sr.get_d()), q = affine_point(c, t);
      double l = lambda(rng);
      std::array<double, 3> x;
      for (std::size_t i = 0; i < 3; ++i) x[i] = l * p[i] + (1 - l) * q[i];
      CHECK(relative_residual(surface, x) < 1e-8);
      ++samples;
    }
  }
}

TEST_CASE("resource limit marks components instead of failing") {
  ProjectiveCurve c = to_projective(running_spec());
  EdgeOptions o;
  o.groebner.max_pairs = 3;
  auto comps = edge_components(c, o);
  REQUIRE(comps.size() == 3);
  CHECK(comps[2].status == ComponentStatus::ResourceLimit);
}

TEST_CASE("parallel components match the sequential result") {
  ProjectiveCurve c = to_projective(quartic_spec());
  EdgeOptions o;
  o.threads = 4;
  auto a = edge_components(c, o);
  auto b = edge_components(c);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].surface == b[k].surface);
}

TEST_CASE("pencil of quadrics") {
  QuadricPencilSpec p;
  p.q1 = {{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 3}};
  p.q2 = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  auto xyz = space_ring();
  // Singular members at t = 1, -1, -2, -3.
  Polynomial expected = Polynomial::constant(xyz, 1);
  for (int t : {1, -1, -2, -3}) {
    Polynomial cone = Polynomial::constant(xyz, Rational(-1 + t));
    cone += Rational(1 + t) * P(xyz, "x^2") + Rational(2 + t) * P(xyz, "y^2") + Rational(3 + t) * P(xyz, "z^2");
    expected *= cone;
  }
  Polynomial surface = pencil_edge_surface(p);
  CHECK(surface.total_degree() == 8);
  CHECK(surface == expected.canonical());
  std::swap(p.q1, p.q2);
  CHECK(pencil_edge_surface(p) == surface);

  QuadricPencilSpec low = p;
  low.q1 = {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  low.q2 = {{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 0}};
  try {
    pencil_edge_surface(low);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegeneratePencil);
  }
}
