#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "chull/edgesurface.hpp"
#include "chull/error.hpp"
#include "chull/tritangent.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chull;
using chull::test::P;

namespace {

ProjectiveCurve running_curve() {
  TrigCurveSpec s;
  s.m = 3;
  s.cos[0] = {1, 0, 0};
  s.sin[1] = {0, 1, 0};
  s.cos[2] = {0, 0, 1};
  return to_projective(s);
}

ProjectiveCurve morton_curve() {
  auto r = binary_ring();
  return ProjectiveCurve::from_forms({P(r, "2*(x0^4+2*x0^2*x1^2+x1^4-2*x0^3*x1+2*x0*x1^3)*(x0^2+x1^2)"),
                                      P(r, "(x0-x1)*(x0+x1)*(x1^2+4*x0*x1+x0^2)*(x1^2-4*x0*x1+x0^2)"),
                                      P(r, "2*x0*x1*(x0^2-3*x1^2)*(3*x0^2-x1^2)"),
                                      P(r, "(2*x0*x1+x0^2-x1^2)*(x0^2-x1^2-2*x0*x1)*(x0^2+x1^2)")});
}

double coefficient(const Polynomial& f, unsigned ex, unsigned ey, unsigned ez) {
  for (const auto& t : f.terms())
    if (t.mono[0] == ex && t.mono[1] == ey && t.mono[2] == ez) return t.coeff.get_d();
  return 0;
}

}  // namespace

TEST_CASE("squares ideal for sextics") {
  SquaresIdeal p = squares_ideal(6);
  CHECK(p.d == 6);
  CHECK(p.ideal.size() == 45);
  for (const auto& g : p.ideal.generators()) CHECK(g.total_degree() == 4);
  auto r = p.ideal.ring();
  GroebnerBasis gb = groebner_basis(p.ideal);
  CHECK(gb.contains(P(r, "16*k0^2*k6^2+8*k0*k1*k5*k6-4*k0*k3^2*k6+k1^2*k5^2")));
  CHECK(gb.contains(P(r, "8*k0^2*k5*k6+2*k0*k1*k5^2-4*k0*k2*k3*k6+k1^2*k3*k6")));
  CHECK_FALSE(gb.contains(P(r, "k0*k6")));
}

TEST_CASE("squared cubics lie on the squares ideal") {
  SquaresIdeal p = squares_ideal(6);
  std::mt19937 rng(107);
  std::uniform_int_distribution<int> c(-20, 20);
  for (int k = 0; k < 25; ++k) {
    std::array<Rational, 4> nu;
    for (auto& v : nu) v = make_rational(c(rng), 1 + k % 4);
    std::vector<Rational> kappa(7, Rational(0));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) kappa[i + j] += nu[i] * nu[j];
    for (const auto& g : p.ideal.generators()) CHECK(g.evaluate(kappa) == 0);
  }
  // A form with only two double roots is not a square of a cubic times anything.
  std::vector<Rational> generic{1, 2, 3, 5, 7, 11, 13};
  bool some_nonzero = false;
  for (const auto& g : p.ideal.generators()) some_nonzero = some_nonzero || g.evaluate(generic) != 0;
  CHECK(some_nonzero);
}

TEST_CASE("squares ideal argument checks") {
  CHECK_THROWS_AS(squares_ideal(5), Error);
  CHECK_THROWS_AS(squares_ideal(4), Error);
  try {
    squares_ideal(10);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeCapExceeded);
  }
}

TEST_CASE("squares ideal disk cache") {
  auto dir = std::filesystem::temp_directory_path() / ("chull_cache_test_" + std::to_string(std::random_device{}()));
  TritangentOptions o;
  o.cache_dir = dir.string();
  clear_squares_cache();
  SquaresIdeal first = squares_ideal(6, o);
  auto file = dir / "P_6.ideal";
  REQUIRE(std::filesystem::exists(file));
  std::size_t lines = 0;
  {
    std::ifstream in(file);
    for (std::string line; std::getline(in, line);) lines += !line.empty();
  }
  CHECK(lines == 45);
  clear_squares_cache();
  SquaresIdeal loaded = squares_ideal(6, o);
  CHECK(same_ideal(first.ideal, loaded.ideal));
  // A corrupted file is detected and regenerated.
  { std::ofstream(file) << "k0*k6\n"; }
  clear_squares_cache();
  SquaresIdeal again = squares_ideal(6, o);
  CHECK(again.ideal.size() == 45);
  std::filesystem::remove_all(dir);
}

TEST_CASE("plane coordinates of the running curve") {
  SquaresIdeal p6 = squares_ideal(6);
  TritangentIdeal t = tritangent_ideal(running_curve(), p6);
  auto planes = plane_ring();
  // k_i are the coefficients of alpha F0 + beta F1 + gamma F2 + delta F3.
  std::vector<Polynomial> kappa{P(planes, "alpha-beta-delta"),  P(planes, "-4*gamma"), P(planes, "3*alpha-beta+15*delta"),
                                P(planes, "0"),                 P(planes, "3*alpha+beta-15*delta"), P(planes, "4*gamma"),
                                P(planes, "alpha+beta+delta")};
  std::vector<Polynomial> expected;
  for (const auto& g : p6.ideal.generators()) {
    Polynomial s = g.substitute(planes, kappa);
    if (!s.is_zero()) expected.push_back(s.canonical());
  }
  CHECK(same_ideal(t.ideal, Ideal(planes, expected)));
  // alpha - delta = beta = gamma = 0 is a tritangent plane.
  for (const auto& g : t.ideal.generators()) {
    std::vector<Rational> pt{1, 0, 0, 1};
    CHECK(g.evaluate(pt) == 0);
  }
  CHECK_THROWS_AS(tritangent_ideal(ProjectiveCurve::from_forms({P(binary_ring(), "x0^4"), P(binary_ring(), "x1^4"),
                                                                P(binary_ring(), "x0*x1^3"), P(binary_ring(), "x0^3*x1")}),
                                   squares_ideal(6)),
                  Error);
}

TEST_CASE("Chow form of the running curve") {
  ChowResult res = chow_form(tritangent_ideal(running_curve(), squares_ideal(6)));
  CHECK(res.finite);
  CHECK(res.dimension == 0);
  CHECK(res.degree == 8);
  CHECK(res.chow == P(space_ring(), "(z-1)*(z+1)*(x-1)^3*(x+1)^3").canonical());
}

TEST_CASE("Chow form of the Morton curve") {
  ChowResult res = chow_form(tritangent_ideal(morton_curve(), squares_ideal(6)));
  CHECK(res.finite);
  CHECK(res.degree == 8);
  CHECK(res.chow == P(space_ring(), chull::test::golden("morton_chow.txt")));
  // The planes x + i y through the origin force a change of chart.
  CHECK(res.changed_chart);
}

TEST_CASE("Morton planes recovered numerically from the Chow form") {
  Polynomial quartic = P(space_ring(), "13225*x^4+58880*x^3*y+91986*x^2*y^2-638976*x^2*z^2+13225*y^4+58880*x*y^3-1148160*x*y*z^2"
                            "-638976*y^2*z^2+6230016*z^4+449280*x^2*z-449280*y^2*z-409600*x^2-736000*x*y-409600*y^2"
                            "-7987200*z^2+2560000");
  Polynomial chow = P(space_ring(), chull::test::golden("morton_chow.txt"));
  CHECK(chow == (P(space_ring(), "(x^2+y^2)^2") * quartic).canonical());
  // quartic = c0 ((1+rz)^2 - (px+qy)^2) ((1-rz)^2 - (qx+py)^2).
  double c0 = coefficient(quartic, 0, 0, 0);
  double r = std::pow(coefficient(quartic, 0, 0, 4) / c0, 0.25);
  double pq = std::sqrt(coefficient(quartic, 4, 0, 0) / c0);
  double sum_sq = coefficient(quartic, 3, 1, 0) / c0 / (2 * pq);
  double p = (std::sqrt(sum_sq + 2 * pq) + std::sqrt(sum_sq - 2 * pq)) / 2;
  double q = (std::sqrt(sum_sq + 2 * pq) - std::sqrt(sum_sq - 2 * pq)) / 2;
  CHECK(std::abs(p - 0.339305) < 1e-6);
  CHECK(std::abs(q - 0.211829) < 1e-6);
  CHECK(std::abs(r - 1.248999) < 1e-6);
  const std::array<std::array<double, 3>, 4> planes{{{p, q, r}, {-p, -q, r}, {q, p, -r}, {-q, -p, -r}}};
  std::mt19937 rng(109);
  std::uniform_real_distribution<double> u(-2, 2);
  for (const auto& pl : planes)
    for (int k = 0; k < 5; ++k) {
      double x = u(rng), y = u(rng);
      double z = -(1 + pl[0] * x + pl[1] * y) / pl[2];
      double pt[3] = {x, y, z};
      double value = chow.evaluate(std::span<const double>(pt, 3)), scale = 0;
      for (const auto& t : chow.terms())
        scale += std::abs(t.coeff.get_d() * std::pow(x, t.mono[0]) * std::pow(y, t.mono[1]) * std::pow(z, t.mono[2]));
      CHECK(std::abs(value) / scale < 1e-8);
    }
}

TEST_CASE("Chow form of the Henrion curve") {
  TrigCurveSpec s;
  s.m = 3;
  s.cos[0] = {1, 2, 0};
  s.sin[1] = {1, 2, 0};
  s.sin[2] = {0, 0, 2};
  ChowResult res = chow_form(tritangent_ideal(to_projective(s), squares_ideal(6)));
  CHECK(res.degree == 8);
  CHECK(res.chow == P(space_ring(), chull::test::golden("henrion_chow.txt")));
}

TEST_CASE("curves with a family of tritangent planes are flagged") {
  auto r = binary_ring();
  ProjectiveCurve c = ProjectiveCurve::from_forms(
      {P(r, "x0^6-2*x0*x1^5"), P(r, "2*x0^5*x1+x1^6"), P(r, "x0^4*x1^2"), P(r, "x0^2*x1^4")});
  ChowResult res = chow_form(tritangent_ideal(c, squares_ideal(6)));
  CHECK_FALSE(res.finite);
  CHECK(res.dimension >= 1);
  CHECK_FALSE(res.saturated.is_zero());
}

TEST_CASE("generic rational sextics have eight tritangent planes") {
  std::mt19937 rng(113);
  int checked = 0;
  for (int k = 0; k < 6 && checked < 3; ++k) {
    std::array<Polynomial, 4> f;
    for (auto& g : f) g = chull::test::random_binary_form(binary_ring(), rng, 6, 3);
    ProjectiveCurve c = ProjectiveCurve::from_forms(f);
    if (c.degree() != 6) continue;
    ChowResult res = chow_form(tritangent_ideal(c, squares_ideal(6)));
    CHECK(res.finite);
    CHECK(res.degree == 8);
    CHECK(res.chow.total_degree() == 8);
    ++checked;
  }
  CHECK(checked > 0);
}
