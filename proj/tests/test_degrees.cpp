#include <functional>
#include <vector>

#include "chull/degrees.hpp"
#include "chull/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chull;

namespace {

// Expands (1 + sum a_i^2 t_i)^g (1 + sum a_i t_i)^e as a polynomial and reads off the coefficient.
Integer expanded_coefficient(const std::vector<long>& a, const std::vector<long>& n, long g, long e) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < a.size(); ++i) names.push_back("t" + std::to_string(i + 1));
  auto r = Ring::make(names);
  Polynomial first = Polynomial::constant(r, 1), second = Polynomial::constant(r, 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    first += Polynomial::variable(r, i) * Rational(a[i] * a[i]);
    second += Polynomial::variable(r, i) * Rational(a[i]);
  }
  Polynomial f = Polynomial::constant(r, 1);
  for (long j = 0; j < g; ++j) f *= first;
  for (long j = 0; j < e; ++j) f *= second;
  for (const auto& t : f.terms()) {
    bool match = true;
    for (std::size_t i = 0; i < n.size(); ++i) match = match && t.mono[i] == n[i];
    if (match) return t.coeff.get_num();
  }
  return 0;
}

Integer choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("report on the standard examples") {
  DegreeReport r = report({6, 0, 0, 0});
  CHECK(r.edge_degree == 30);
  CHECK(r.tritangent_count == 8);
  r = report({4, 1, 0, 0});
  CHECK(r.edge_degree == 8);
  CHECK(r.tritangent_count == 0);
  CHECK(r.dual_degree == 8);
  CHECK(report({4, 0, 1, 0}).edge_degree == 4);
  r = report({4, 0, 0, 0});
  CHECK(r.edge_degree == 6);
  CHECK(r.tritangent_count == 0);
  CHECK(r.double_curve_degree == 0);
  CHECK(r.cuspidal_edge_degree == 6);
  CHECK_FALSE(r.cusp_cone_degree.has_value());
  r = report({5, 0, 0, 2});
  REQUIRE(r.cusp_cone_degree.has_value());
  CHECK(*r.cusp_cone_degree == 3);
  CHECK(r.edge_degree == 2 * 2 * 4 - 4);
}

TEST_CASE("report rejects bad invariants") {
  for (long d : {0, 1, 2, 3}) {
    try {
      report({d, 0, 0, 0});
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidProfile);
    }
  }
  CHECK_THROWS_AS(report({5, -1, 0, 0}), Error);
  CHECK_THROWS_AS(report({5, 0, -1, 0}), Error);
}

TEST_CASE("dejonquieres examples") {
  CHECK(dejonquieres({2, 1}, {3, 0}, 6, 0, 3) == 8);
  CHECK(dejonquieres({2, 1}, {1, 2}, 4, 1, 1) == 8);
  CHECK(dejonquieres({4, 1}, {1, 0}, 4, 0, 3) == 4);
}

TEST_CASE("dejonquieres profile checks") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code([] { dejonquieres({2, 2}, {1, 2}, 6, 0, 3); }) == ErrorCode::InvalidProfile);
  CHECK(code([] { dejonquieres({2, 1}, {3, 1}, 6, 0, 2); }) == ErrorCode::InvalidProfile);
  CHECK(code([] { dejonquieres({2, 1}, {3, 0}, 6, 0, 2); }) == ErrorCode::InvalidProfile);
  CHECK(code([] { dejonquieres({2, 1}, {3, 0}, 6, 4, 3); }) == ErrorCode::InvalidProfile);
  CHECK(code([] { dejonquieres({0, 1}, {3, 6}, 6, 0, -3); }) == ErrorCode::InvalidProfile);
  CHECK(code([] { dejonquieres({2, 1}, {-1, 8}, 6, 0, -1); }) == ErrorCode::InvalidProfile);
  CHECK(code([] { dejonquieres({}, {}, 0, 0, 0); }) == ErrorCode::InvalidProfile);
}

TEST_CASE("dejonquieres agrees with brute-force expansion") {
  const std::vector<std::vector<long>> profiles{{2, 1}, {4, 1}, {3, 1}, {3, 2, 1}};
  for (const auto& a : profiles)
    for (long d = 4; d <= 10; ++d)
      for (long g = 0; g <= 3; ++g) {
        // Every split of d into the a_i with the last entry absorbing the rest.
        std::vector<long> n(a.size(), 0);
        std::function<void(std::size_t, long)> walk = [&](std::size_t i, long left) {
          if (i + 1 == a.size()) {
            if (left % a[i]) return;
            n[i] = left / a[i];
            long count = 0;
            for (long v : n) count += v;
            long s = d - count;
            if (s < 0 || s > 3 || d - s - g < 0) return;
            CHECK(dejonquieres(a, n, d, g, s) == expanded_coefficient(a, n, g, d - s - g));
            return;
          }
          for (n[i] = 0; n[i] * a[i] <= left; ++n[i]) walk(i + 1, left - n[i] * a[i]);
        };
        walk(0, d);
      }
}

TEST_CASE("closed forms agree with dejonquieres on the grid") {
  for (long d = 4; d <= 12; ++d)
    for (long g = 0; g <= 4; ++g) {
      DegreeReport r = report({d, g, 0, 0});
      if (d >= 6 && d - 3 - g >= 0) CHECK(dejonquieres({2, 1}, {3, d - 6}, d, g, 3) == r.tritangent_count);
      if (d - 1 - g >= 0) CHECK(dejonquieres({2, 1}, {1, d - 2}, d, g, 1) == r.dual_degree);
      if (d - 3 - g >= 0) CHECK(dejonquieres({4, 1}, {1, d - 4}, d, g, 3) == r.stalls);
      CHECK(r.tritangent_count == 8 * choose(d + g - 1, 3) - 8 * (d + g - 4) * (d + 2 * g - 2) + 8 * g - 8);
    }
}

TEST_CASE("intersection numbers on the symmetric square") {
  for (long d = 4; d <= 12; ++d) {
    for (long g = 1; g <= 4; ++g) {
      NSClass h = hyperplane_class(d), b = bisecant_class(d, g), cp{1, 0}, delta{0, 1};
      CHECK(ns_intersect(h, b, g) == 2 * (d - 3) * (d + g - 1));
      CHECK(ns_intersect(h, b, g) == 2 * (d - 1) * (d + g - 1) - 4 * d + 4 * (1 - g));
      CHECK(ns_intersect(h, b, g) == report({d, g, 0, 0}).edge_degree);
      CHECK(ns_intersect(h, cp, g) == d - 1);
      // Stationary bisecants through a point, and tangent lines at stalls.
      CHECK(ns_intersect(b, cp, g) == 2 * (d + g - 3));
      CHECK(2 * ns_intersect(b, delta, g) == 4 * (d + 3 * g - 3));
      CHECK(ns_intersect(h, b, g) == ns_intersect(b, h, g));
    }
    // Rational curves: C_p = Delta, B = 2(d-3) C_p.
    NSClass h0 = collapse_rational(hyperplane_class(d)), b0 = collapse_rational(bisecant_class(d, 0));
    CHECK(b0.cp == 2 * (d - 3));
    CHECK(ns_intersect(h0, b0, 0) == report({d, 0, 0, 0}).edge_degree);
  }
  CHECK(ns_intersect(collapse_rational(hyperplane_class(6)), collapse_rational(bisecant_class(6, 0)), 0) == 30);
  CHECK(ns_intersect({0, 1}, {0, 1}, 1) == 0);
}

TEST_CASE("double curve of the rational quartic") {
  DegreeReport r = report({4, 0, 0, 0});
  // A plane section: degree e, four points of multiplicity m, the cusps, rational.
  long e = r.edge_degree, m = r.multiplicity_along_curve;
  long nodes = (e - 1) * (e - 2) / 2 - 4 * m * (m - 1) / 2 - r.cuspidal_edge_degree - r.bisecant_curve_genus;
  CHECK(nodes == 0);
  CHECK(r.double_curve_degree == 0);
  CHECK(r.bisecant_curve_genus == 0);
  CHECK(report({6, 0, 0, 0}).double_curve_degree == 252);
  CHECK(report({5, 1, 0, 0}).double_curve_degree == 60);
}

TEST_CASE("singular corrections") {
  for (long d = 4; d <= 12; ++d)
    for (long n = 0; n <= 3; ++n)
      for (long k = 0; k <= 3; ++k) {
        DegreeReport r = report({d, 0, n, k});
        CHECK(r.edge_degree == report({d, 0, 0, 0}).edge_degree - 2 * n - 2 * k);
        CHECK(r.cusp_cone_degree.has_value() == (k > 0));
      }
}
