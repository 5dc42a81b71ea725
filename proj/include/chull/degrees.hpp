#pragma once

#include <optional>
#include <vector>

#include "chull/rational.hpp"

namespace chull {

struct CurveInvariants {
  long d = 0;
  long g = 0;
  /// Ordinary nodes and cusps.
  long n = 0;
  long k = 0;
};

/// a C_p + b Delta on the symmetric square of the curve; Delta is half the diagonal.
struct NSClass {
  long cp = 0;
  long delta = 0;
};

/// Coefficient of prod t_i^{n_i} in (1 + sum a_i^2 t_i)^g (1 + sum a_i t_i)^(d-s-g).
/// Throws InvalidProfile unless the a_i are distinct and positive, the n_i
/// are nonnegative, sum a_i n_i = d, s = d - sum n_i and d - s - g >= 0.
Integer dejonquieres(const std::vector<long>& a, const std::vector<long>& n, long d, long g, long s);

/// C_p^2 = C_p.Delta = 1, Delta^2 = 1 - g.
long ns_intersect(const NSClass& u, const NSClass& v, long g);

/// Hyperplane class d C_p - Delta and the stationary bisecant class
/// 2(d+g-1) C_p - 4 Delta.
NSClass hyperplane_class(long d);
NSClass bisecant_class(long d, long g);

/// On a rational curve S_2 is the plane and C_p = Delta.
NSClass collapse_rational(const NSClass& c);

struct DegreeReport {
  long edge_degree = 0;
  Integer tritangent_count;
  long dual_degree = 0;
  long stalls = 0;
  long multiplicity_along_curve = 0;
  long cuspidal_edge_degree = 0;
  long double_curve_degree = 0;
  long bisecant_curve_genus = 0;
  /// Present when k > 0.
  std::optional<long> cusp_cone_degree;
};

/// Throws InvalidProfile for d <= 3 or negative entries.
DegreeReport report(const CurveInvariants& ci);

}  // namespace chull
