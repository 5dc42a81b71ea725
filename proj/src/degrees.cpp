#include "chull/degrees.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "chull/error.hpp"

namespace chull {

namespace {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer power(long base, long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::abs(base)), static_cast<unsigned long>(e));
  return (base < 0 && e % 2) ? Integer(-r) : r;
}

// Coefficient of prod t_i^{m_i} in (1 + sum w_i t_i)^e.
Integer multinomial_coefficient(const std::vector<long>& w, const std::vector<long>& m, long e) {
  long total = std::accumulate(m.begin(), m.end(), 0L);
  if (total > e) return 0;
  Integer c = binomial(e, total);
  long left = total;
  for (std::size_t i = 0; i < m.size(); ++i) {
    c *= binomial(left, m[i]) * power(w[i], m[i]);
    left -= m[i];
  }
  return c;
}

constexpr long double_curve(long d, long g) {
  return 2 * d * d * d * d + 4 * d * d * d * g + 2 * d * d * g * g - 18 * d * d * d - 14 * d * g * g - 32 * d * d * g +
         46 * d * d + 52 * d * g + 8 * g * g - 6 * d + 64 * g - 72;
}

static_assert(double_curve(4, 0) == 0);

}  // namespace

Integer dejonquieres(const std::vector<long>& a, const std::vector<long>& n, long d, long g, long s) {
  if (a.empty() || a.size() != n.size()) throw Error(ErrorCode::InvalidProfile, "a and n need the same positive length");
  if (std::set<long>(a.begin(), a.end()).size() != a.size())
    throw Error(ErrorCode::InvalidProfile, "multiplicities must be distinct");
  long weighted = 0, count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) throw Error(ErrorCode::InvalidProfile, "multiplicities must be positive");
    if (n[i] < 0) throw Error(ErrorCode::InvalidProfile, "point counts must be nonnegative");
    weighted += a[i] * n[i];
    count += n[i];
  }
  if (g < 0) throw Error(ErrorCode::InvalidProfile, "genus must be nonnegative");
  if (weighted != d) throw Error(ErrorCode::InvalidProfile, "sum a_i n_i must equal d");
  if (s != d - count) throw Error(ErrorCode::InvalidProfile, "s must equal d - sum n_i");
  long e = d - s - g;
  if (e < 0) throw Error(ErrorCode::InvalidProfile, "d - s - g must be nonnegative");

  std::vector<long> squares(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) squares[i] = a[i] * a[i];
  // Split each n_i = m_i + l_i between the two factors.
  Integer sum = 0;
  std::vector<long> m(a.size(), 0), l(n);
  while (true) {
    sum += multinomial_coefficient(squares, m, g) * multinomial_coefficient(a, l, e);
    std::size_t i = 0;
    while (i < m.size() && m[i] == n[i]) {
      m[i] = 0;
      l[i] = n[i];
      ++i;
    }
    if (i == m.size()) break;
    ++m[i];
    --l[i];
  }
  return sum;
}

long ns_intersect(const NSClass& u, const NSClass& v, long g) {
  return u.cp * v.cp + u.cp * v.delta + u.delta * v.cp + u.delta * v.delta * (1 - g);
}

NSClass hyperplane_class(long d) { return {d, -1}; }

NSClass bisecant_class(long d, long g) { return {2 * (d + g - 1), -4}; }

NSClass collapse_rational(const NSClass& c) { return {c.cp + c.delta, 0}; }

DegreeReport report(const CurveInvariants& ci) {
  const long d = ci.d, g = ci.g, n = ci.n, k = ci.k;
  if (d <= 3) throw Error(ErrorCode::InvalidProfile, "degree must exceed 3");
  if (g < 0 || n < 0 || k < 0) throw Error(ErrorCode::InvalidProfile, "invariants must be nonnegative");
  DegreeReport r;
  r.edge_degree = 2 * (d - 3) * (d + g - 1) - 2 * n - 2 * k;
  r.tritangent_count = 8 * binomial(d + g - 1, 3) - 8 * (d + g - 4) * (d + 2 * g - 2) + 8 * g - 8;
  r.dual_degree = 2 * (d + g - 1);
  r.stalls = 4 * (d + 3 * g - 3);
  r.multiplicity_along_curve = 2 * (d + g - 3);
  r.cuspidal_edge_degree = 6 * ((d + g - 3) * (d + g - 3) - 4 * g);
  r.double_curve_degree = double_curve(d, g);
  r.bisecant_curve_genus = 2 * (d + g - 2) * (d + 2 * g - 4) + d - 7 * g - 4;
  if (k > 0) r.cusp_cone_degree = d - 2;
  return r;
}

}  // namespace chull
