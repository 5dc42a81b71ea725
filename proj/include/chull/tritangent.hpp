#pragma once

#include <string>

#include "chull/curve.hpp"
#include "chull/groebner.hpp"
#include "chull/polynomial.hpp"

namespace chull {

/// Q[alpha, beta, gamma, delta]: the plane alpha + beta x + gamma y + delta z = 0.
const RingPtr& plane_ring();

/// Ideal of binary forms sum k_i x0^i x1^(d-i) that are squares, over
/// Q[k0, ..., kd]; minimal homogeneous generators.
struct SquaresIdeal {
  unsigned d = 0;
  Ideal ideal;
};

struct TritangentOptions {
  GroebnerOptions groebner;
  unsigned degree_cap = 8;
  /// Directory for P_<d>.ideal files. Empty: $CHULL_CACHE_DIR, and no disk
  /// cache when that is unset too.
  std::string cache_dir;
  unsigned seed = 0;
  unsigned max_chart_attempts = 8;
};

/// Throws InvalidArgument (odd or d < 6), DegreeCapExceeded, ResourceLimit.
SquaresIdeal squares_ideal(unsigned d, const TritangentOptions& options = {});

/// Drops the in-memory copies of computed squares ideals.
void clear_squares_cache();

/// Generators of P_d before minimization (the elimination output).
Ideal squares_elimination(unsigned d, const GroebnerOptions& options = {});

struct TritangentIdeal {
  ProjectiveCurve curve;
  Ideal ideal;
};

/// k_i := coefficient of x0^i x1^(d-i) in alpha F0 + beta F1 + gamma F2 + delta F3.
/// Throws DegreeMismatch.
TritangentIdeal tritangent_ideal(const ProjectiveCurve& c, const SquaresIdeal& p);

struct ChowResult {
  /// Saturated ideal defines finitely many planes.
  bool finite = true;
  /// det(I + x M_beta + y M_gamma + z M_delta), canonical, over space ring
  /// (x, y, z); 1 when there are no planes.
  Polynomial chow;
  /// Saturation by <alpha, beta, gamma, delta>.
  Ideal saturated;
  /// Projective dimension of the saturated ideal (-1 when empty).
  int dimension = -1;
  /// Number of planes counted with multiplicity.
  std::size_t degree = 0;
  /// Plane coordinate change used for the chart (identity when none).
  bool changed_chart = false;
};

/// Throws ResourceLimit, ChartFailure.
ChowResult chow_form(const TritangentIdeal& t, const TritangentOptions& options = {});

}  // namespace chull
