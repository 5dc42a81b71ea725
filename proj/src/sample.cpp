#include "chull/sample.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "chull/error.hpp"

namespace chull {

namespace {

int exact_sign(const Polynomial& f, const std::array<double, 3>& p) {
  std::array<Rational, 3> q{rational_from_double_exact(p[0]), rational_from_double_exact(p[1]),
                            rational_from_double_exact(p[2])};
  return sgn(f.evaluate(std::span<const Rational>(q)));
}

}  // namespace

std::vector<std::array<double, 3>> sample_sign_changes(const Polynomial& f, const SampleOptions& options) {
  if (f.ring()->num_vars() != 3) throw Error(ErrorCode::InvalidArgument, "sampling needs a polynomial in x, y, z");
  if (options.resolution == 0) throw Error(ErrorCode::InvalidArgument, "resolution must be positive");
  for (int a = 0; a < 3; ++a)
    if (!(options.lo[a] < options.hi[a])) throw Error(ErrorCode::InvalidArgument, "empty bounding box");

  const unsigned n = options.resolution, m = n + 1;
  std::array<double, 3> step;
  for (int a = 0; a < 3; ++a) step[a] = (options.hi[a] - options.lo[a]) / n;
  auto corner = [&](unsigned i, unsigned j, unsigned k) {
    return std::array<double, 3>{options.lo[0] + i * step[0], options.lo[1] + j * step[1], options.lo[2] + k * step[2]};
  };

  std::vector<signed char> sign(std::size_t(m) * m * m);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j)
      for (unsigned k = 0; k < m; ++k) {
        auto p = corner(i, j, k);
        double v = f.evaluate(std::span<const double>(p));
        double scale = 0;
        for (const auto& t : f.terms())
          scale += std::abs(t.coeff.get_d() * std::pow(p[0], t.mono[0]) * std::pow(p[1], t.mono[1]) *
                            std::pow(p[2], t.mono[2]));
        int s = std::abs(v) <= 1e-9 * scale ? exact_sign(f, p) : (v > 0) - (v < 0);
        sign[(std::size_t(i) * m + j) * m + k] = static_cast<signed char>(s);
      }

  std::vector<std::array<double, 3>> out;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned k = 0; k < n; ++k) {
        bool pos = false, neg = false, zero = false;
        for (unsigned c = 0; c < 8; ++c) {
          int s = sign[(std::size_t(i + (c & 1)) * m + j + ((c >> 1) & 1)) * m + k + (c >> 2)];
          pos = pos || s > 0;
          neg = neg || s < 0;
          zero = zero || s == 0;
        }
        if ((pos && neg) || zero) {
          auto p = corner(i, j, k);
          out.push_back({p[0] + step[0] / 2, p[1] + step[1] / 2, p[2] + step[2] / 2});
        }
      }
  return out;
}

void write_csv(std::ostream& out, const std::vector<std::array<double, 3>>& points) {
  out << "x,y,z\n";
  char buf[96];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g\n", p[0], p[1], p[2]);
    out << buf;
  }
}

}  // namespace chull
