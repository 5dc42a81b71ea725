#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "chull/polynomial.hpp"

namespace chull {

struct SampleOptions {
  std::array<double, 3> lo{-2, -2, -2};
  std::array<double, 3> hi{2, 2, 2};
  /// Cells per axis.
  unsigned resolution = 50;
};

/// Centers of the grid cells whose corners do not all have the same sign.
/// Values within a relative 1e-9 of zero are re-evaluated exactly.
std::vector<std::array<double, 3>> sample_sign_changes(const Polynomial& f, const SampleOptions& options);

void write_csv(std::ostream& out, const std::vector<std::array<double, 3>>& points);

}  // namespace chull
