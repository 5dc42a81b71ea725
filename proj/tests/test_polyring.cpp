#include <random>

#include "chull/algebra.hpp"
#include "chull/error.hpp"
#include "chull/poly_matrix.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chull;
using chull::test::P;

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-0/7") == 0);
  CHECK(parse_rational(" 10/2 ") == 5);
  CHECK_THROWS_AS(parse_rational("10/-1"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("polynomial text grammar") {
  auto r = Ring::make({"x", "y", "z"});
  Polynomial f = P(r, "z^8 + 1024*x^16 - 12032*x^14*y^2 + 3/2*x*y");
  CHECK(f.to_string() == "1024*x^16-12032*x^14*y^2+z^8+3/2*x*y");
  CHECK(P(r, "(x-y)^2") == P(r, "x^2-2*x*y+y^2"));
  CHECK(P(r, "-x") .to_string() == "-x");
  CHECK(P(r, "0").to_string() == "0");
  try {
    P(r, "x +* y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() >= 3);
  }
  CHECK_THROWS_AS(P(r, "w+1"), ParseError);
}

TEST_CASE("serialize then parse reproduces the polynomial") {
  std::mt19937 rng(11);
  auto r = Ring::make({"a", "b", "c", "d"});
  for (int k = 0; k < 200; ++k) {
    Polynomial f = test::random_poly(r, rng, 7, 12, 1000);
    f *= Rational(1, 1 + k % 7);
    CHECK(P(r, f.to_string()) == f);
  }
}

TEST_CASE("exact_divide examples") {
  auto r = Ring::make({"x"});
  CHECK(exact_divide(P(r, "x^2-1"), P(r, "x-1")) == P(r, "x+1"));
  CHECK_THROWS_AS(exact_divide(P(r, "x^2+1"), P(r, "x-1")), Error);

  auto s = Ring::make({"xp0", "xp1", "xq0", "xq1"});
  std::mt19937 rng(3);
  Polynomial w = P(s, "xp0*xq1-xp1*xq0");
  for (int k = 0; k < 5; ++k) {
    // Random bidegree (3,3) form.
    std::vector<Polynomial::Term> terms;
    std::uniform_int_distribution<int> c(-20, 20);
    for (unsigned i = 0; i <= 3; ++i)
      for (unsigned j = 0; j <= 3; ++j) {
        Monomial m;
        m.exp = {std::uint8_t(i), std::uint8_t(3 - i), std::uint8_t(j), std::uint8_t(3 - j)};
        terms.push_back({m, Rational(c(rng))});
      }
    Polynomial h = Polynomial::from_terms(s, terms);
    CHECK(exact_divide(w * h, w) == h);
  }
}

TEST_CASE("exact_divide round trip on random sparse polynomials") {
  std::mt19937 rng(5);
  for (std::size_t nv = 1; nv <= 4; ++nv) {
    std::vector<std::string> names;
    for (std::size_t v = 0; v < nv; ++v) names.push_back("v" + std::to_string(v));
    auto r = Ring::make(names);
    for (int k = 0; k < 40; ++k) {
      Polynomial f = test::random_poly(r, rng, 6, 6);
      Polynomial g = test::random_poly(r, rng, 6, 5);
      if (g.is_zero()) continue;
      CHECK(exact_divide(f * g, g) == f);
    }
  }
}

TEST_CASE("determinant examples") {
  auto r = Ring::make({"t"});
  CHECK(determinant(PolyMatrix::identity(r, 2)) == P(r, "1"));
  PolyMatrix m(r, 4, 4);
  const char* diag[] = {"1+t", "1+2*t", "1+3*t", "-1-t"};
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = P(r, diag[i]);
  CHECK(determinant(m) == P(r, "(1+t)*(1+2*t)*(1+3*t)*(-1-t)"));
  CHECK_THROWS_AS(determinant(PolyMatrix(r, 2, 3)), Error);
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
  std::mt19937 rng(17);
  auto r = Ring::make({"x", "y", "z"});
  for (std::size_t n = 1; n <= 4; ++n)
    for (int k = 0; k < 6; ++k) {
      PolyMatrix m(r, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = test::random_poly(r, rng, n == 3 ? 1 : 2, 3);
      CHECK(determinant(m) == determinant_cofactor(m));
    }
  // Zero pivots force row exchanges.
  PolyMatrix z(r, 3, 3);
  z(0, 1) = P(r, "x");
  z(1, 0) = P(r, "y");
  z(2, 2) = P(r, "z+1");
  CHECK(determinant(z) == determinant_cofactor(z));
  CHECK(determinant(z) == P(r, "-x*y*z-x*y"));
}

TEST_CASE("determinant is multiplicative on block triangular matrices") {
  std::mt19937 rng(23);
  auto r = Ring::make({"x", "y"});
  for (int k = 0; k < 6; ++k) {
    PolyMatrix a(r, 2, 2), b(r, 3, 3), m(r, 5, 5);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) a(i, j) = m(i, j) = test::random_poly(r, rng, 2, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) b(i, j) = m(i + 2, j + 2) = test::random_poly(r, rng, 2, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 2; j < 5; ++j) m(i, j) = test::random_poly(r, rng, 2, 3);
    CHECK(determinant(m) == determinant(a) * determinant(b));
  }
}

TEST_CASE("resultant examples") {
  auto r = Ring::make({"t", "x", "y"});
  CHECK(resultant(P(r, "t-x"), P(r, "t-y"), "t") == P(r, "x-y"));
  CHECK(resultant(P(r, "t^2-x"), P(r, "t^2-y"), "t") == P(r, "(x-y)^2"));
  CHECK_THROWS_AS(resultant(P(r, "x"), P(r, "t-y"), "t"), Error);
}

TEST_CASE("resultant vanishes exactly on common factors") {
  std::mt19937 rng(29);
  auto r = Ring::make({"t", "x", "y"});
  int with = 0, without = 0;
  for (int k = 0; k < 30; ++k) {
    Polynomial f = test::random_nonconstant(r, rng, 3, 4), g = test::random_nonconstant(r, rng, 3, 4);
    if (k % 2) {
      Polynomial h = test::random_nonconstant(r, rng, 2, 3);
      if (h.degree(0) <= 0) h += P(r, "t");
      f *= h;
      g *= h;
    }
    if (f.degree(0) <= 0 || g.degree(0) <= 0) continue;
    bool common = gcd(f, g).degree(0) > 0;
    CHECK((resultant(f, g, "t").is_zero()) == common);
    (common ? with : without)++;
  }
  CHECK(with > 5);
  CHECK(without > 5);
}

TEST_CASE("gcd examples") {
  auto r = Ring::make({"x", "y", "z"});
  CHECK(gcd(P(r, "x^2*y"), P(r, "x*y^2")) == P(r, "x*y"));
  CHECK(gcd(P(r, "0"), P(r, "0")).is_zero());
  CHECK(gcd(P(r, "-2*x-2"), P(r, "0")) == P(r, "x+1"));
  std::mt19937 rng(31);
  for (int k = 0; k < 25; ++k) {
    Polynomial f = test::random_nonconstant(r, rng, 3, 4);
    Polynomial g = test::random_nonconstant(r, rng, 3, 4);
    Polynomial h = test::random_nonconstant(r, rng, 3, 3);
    CHECK(gcd(f * h, g * h) == (h * gcd(f, g)).canonical());
  }
}

TEST_CASE("squarefree part") {
  auto r = Ring::make({"x", "y", "z"});
  CHECK(squarefree_part(P(r, "(x-1)^3*(x+1)^3")) == P(r, "x^2-1"));
  CHECK(squarefree_part(P(r, "(z-1)*(z+1)*(x-1)^3*(x+1)^3")) == P(r, "(z-1)*(z+1)*(x-1)*(x+1)").canonical());
  CHECK(squarefree_part(P(r, "x^2+y^2-z^2")) == P(r, "x^2+y^2-z^2"));
  std::mt19937 rng(37);
  for (int k = 0; k < 20; ++k) {
    Polynomial f = test::random_nonconstant(r, rng, 3, 4);
    Polynomial s = squarefree_part(f * f);
    CHECK(s == squarefree_part(f));
    CHECK(s.total_degree() <= f.total_degree());
    Polynomial q;
    CHECK(try_exact_divide(f * f, s, &q));
    for (std::size_t v = 0; v < 3; ++v) {
      if (!s.involves(v)) continue;
      // Any factor shared with the derivative must be free of v.
      CHECK(gcd(s, s.derivative(v)).degree(v) == 0);
    }
  }
}
