#include "chull/tritangent.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "chull/edgesurface.hpp"
#include "chull/error.hpp"
#include "chull/poly_matrix.hpp"

namespace chull {

const RingPtr& plane_ring() {
  static const RingPtr ring = Ring::make({"alpha", "beta", "gamma", "delta"});
  return ring;
}

namespace {

RingPtr coefficient_ring(unsigned d) {
  std::vector<std::string> names;
  for (unsigned i = 0; i <= d; ++i) names.push_back("k" + std::to_string(i));
  return Ring::make(names);
}

std::mutex cache_mutex;
std::map<unsigned, Ideal> memory_cache;

std::string cache_directory(const TritangentOptions& options) {
  if (!options.cache_dir.empty()) return options.cache_dir;
  const char* env = std::getenv("CHULL_CACHE_DIR");
  return env ? env : "";
}

bool load_cached(const std::filesystem::path& file, unsigned d, Ideal* out) {
  std::ifstream in(file);
  if (!in) return false;
  RingPtr ring = coefficient_ring(d);
  std::vector<Polynomial> gens;
  std::string line;
  try {
    while (std::getline(in, line))
      if (!line.empty()) gens.push_back(parse_polynomial(ring, line));
  } catch (const Error&) {
    return false;
  }
  if (gens.empty()) return false;
  // A stale or foreign file fails the defining property: squares lie on it.
  std::vector<Rational> nu;
  for (unsigned j = 0; j <= d / 2; ++j) nu.push_back(Rational(int(j * j) + 1));
  std::vector<Rational> kappa(d + 1, Rational(0));
  for (unsigned j = 0; j <= d / 2; ++j)
    for (unsigned l = 0; l <= d / 2; ++l) kappa[j + l] += nu[j] * nu[l];
  for (const auto& g : gens)
    if (g.evaluate(kappa) != 0) return false;
  *out = Ideal(ring, std::move(gens));
  return true;
}

void store_cached(const std::filesystem::path& file, const Ideal& ideal) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  std::filesystem::path tmp = file;
  tmp += ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << ideal.to_string();
    if (!out) return;
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

Ideal squares_elimination(unsigned d, const GroebnerOptions& options) {
  unsigned m = d / 2;
  std::vector<std::string> names, drop;
  for (unsigned j = 0; j <= m; ++j) drop.push_back("n" + std::to_string(j));
  names = drop;
  for (unsigned i = 0; i <= d; ++i) names.push_back("k" + std::to_string(i));
  RingPtr ring = Ring::make(names);
  std::vector<Polynomial> gens;
  for (unsigned i = 0; i <= d; ++i) {
    Polynomial g = Polynomial::variable(ring, m + 1 + i);
    for (unsigned j = 0; j <= m; ++j)
      if (i >= j && i - j <= m) g -= Polynomial::variable(ring, j) * Polynomial::variable(ring, i - j);
    gens.push_back(g);
  }
  WeightMap weights;
  for (unsigned i = 0; i <= d; ++i) weights["k" + std::to_string(i)] = 2;
  Ideal out = eliminate(Ideal(ring, std::move(gens)), drop, options, weights);
  RingPtr target = coefficient_ring(d);
  std::vector<Polynomial> g;
  for (const auto& p : out.generators()) g.push_back(p.to_ring(target));
  return Ideal(target, std::move(g));
}

void clear_squares_cache() {
  std::lock_guard lock(cache_mutex);
  memory_cache.clear();
}

SquaresIdeal squares_ideal(unsigned d, const TritangentOptions& options) {
  if (d % 2 || d < 6) throw Error(ErrorCode::InvalidArgument, "squares ideal needs an even degree d >= 6");
  if (d > options.degree_cap)
    throw Error(ErrorCode::DegreeCapExceeded, "degree " + std::to_string(d) + " exceeds the configured cap");
  std::lock_guard lock(cache_mutex);
  if (auto it = memory_cache.find(d); it != memory_cache.end()) return {d, it->second};
  std::string dir = cache_directory(options);
  std::filesystem::path file;
  Ideal ideal;
  if (!dir.empty()) {
    file = std::filesystem::path(dir) / ("P_" + std::to_string(d) + ".ideal");
    if (load_cached(file, d, &ideal)) {
      memory_cache[d] = ideal;
      return {d, ideal};
    }
  }
  ideal = minimal_generators(squares_elimination(d, options.groebner), options.groebner);
  memory_cache[d] = ideal;
  if (!dir.empty()) store_cached(file, ideal);
  return {d, ideal};
}

TritangentIdeal tritangent_ideal(const ProjectiveCurve& c, const SquaresIdeal& p) {
  if (c.degree() != int(p.d))
    throw Error(ErrorCode::DegreeMismatch, "curve degree " + std::to_string(c.degree()) + " does not match P_" +
                                               std::to_string(p.d));
  const RingPtr& planes = plane_ring();
  std::vector<Polynomial> kappa(p.d + 1, Polynomial(planes));
  for (std::size_t j = 0; j < 4; ++j)
    for (const auto& t : c.form(j).terms()) kappa[t.mono[0]] += t.coeff * Polynomial::variable(planes, j);
  std::vector<Polynomial> gens;
  for (const auto& g : p.ideal.generators()) {
    Polynomial s = g.substitute(planes, kappa);
    if (!s.is_zero()) gens.push_back(s.canonical());
  }
  return {c, Ideal(planes, std::move(gens))};
}

namespace {

using IntMatrix = std::array<std::array<int, 4>, 4>;

Rational det4(const IntMatrix& a) {
  std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = a[i][j];
  Rational det = 1;
  for (std::size_t c = 0; c < 4; ++c) {
    std::size_t p = c;
    while (p < 4 && m[p][c] == 0) ++p;
    if (p == 4) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < 4; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

RationalMatrix product(const RationalMatrix& a, const RationalMatrix& b) {
  std::size_t n = a.size();
  RationalMatrix out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

// Chow form of the affine chart alpha = 1 of a saturated zero-dimensional ideal.
Polynomial chart_chow(const Ideal& sat, std::size_t* degree, const GroebnerOptions& options) {
  RingPtr affine = Ring::make({"beta", "gamma", "delta"});
  std::array<Polynomial, 4> img{Polynomial::constant(affine, 1), Polynomial::variable(affine, 0),
                                Polynomial::variable(affine, 1), Polynomial::variable(affine, 2)};
  std::vector<Polynomial> gens;
  for (const auto& g : sat.generators()) gens.push_back(g.substitute(affine, img));
  GroebnerBasis gb = groebner_basis(Ideal(affine, std::move(gens)), options);
  QuotientAlgebra qa = quotient_algebra(gb);
  std::array<RationalMatrix, 3> m{mult_matrix(qa, "beta"), mult_matrix(qa, "gamma"), mult_matrix(qa, "delta")};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (product(m[i], m[j]) != product(m[j], m[i])) throw Error(ErrorCode::InvalidArgument, "multiplication matrices do not commute");
  const RingPtr& xyz = space_ring();
  std::size_t n = qa.dimension();
  *degree = n;
  PolyMatrix det(xyz, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial e = Polynomial::constant(xyz, i == j ? 1 : 0);
      for (std::size_t v = 0; v < 3; ++v)
        if (m[v][i][j] != 0) e += m[v][i][j] * Polynomial::variable(xyz, v);
      det(i, j) = e;
    }
  return determinant(det);
}

}  // namespace

ChowResult chow_form(const TritangentIdeal& t, const TritangentOptions& options) {
  const RingPtr& planes = plane_ring();
  ChowResult res;
  const RingPtr& xyz = space_ring();
  if (t.ideal.is_zero()) {
    res.finite = false;
    res.saturated = t.ideal;
    res.dimension = 3;
    return res;
  }
  std::vector<Polynomial> vars;
  for (std::size_t v = 0; v < 4; ++v) vars.push_back(Polynomial::variable(planes, v));
  res.saturated = saturate_by_ideal(t.ideal, Ideal(planes, vars), options.groebner);
  GroebnerBasis gb = groebner_basis(res.saturated, options.groebner);
  res.dimension = gb.is_unit() ? -1 : gb.dimension() - 1;
  if (res.dimension < 0) {
    res.dimension = -1;
    res.chow = Polynomial::constant(xyz, 1);
    return res;
  }
  if (res.dimension > 0) {
    res.finite = false;
    return res;
  }

  std::mt19937 rng(options.seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (unsigned attempt = 0; attempt < options.max_chart_attempts; ++attempt) {
    IntMatrix a{};
    if (attempt == 0) {
      for (std::size_t i = 0; i < 4; ++i) a[i][i] = 1;
    } else {
      do {
        for (auto& row : a)
          for (auto& e : row) e = entry(rng);
      } while (det4(a) == 0);
    }
    // Planes pi = A pi'.
    std::vector<Polynomial> img;
    for (std::size_t i = 0; i < 4; ++i) {
      Polynomial e(planes);
      for (std::size_t j = 0; j < 4; ++j) e += Rational(a[i][j]) * vars[j];
      img.push_back(e);
    }
    std::vector<Polynomial> moved;
    for (const auto& g : res.saturated.generators()) moved.push_back(g.substitute(planes, img));
    std::vector<Polynomial> at_infinity = moved;
    at_infinity.push_back(vars[0]);
    if (groebner_basis(Ideal(planes, at_infinity), options.groebner).dimension() > 0) continue;

    Polynomial chow = chart_chow(Ideal(planes, moved), &res.degree, options.groebner);
    res.changed_chart = attempt > 0;
    if (attempt > 0) {
      // <A pi', X> = <pi', A^T X> with X = (1, x, y, z).
      std::array<Polynomial, 4> xs{Polynomial::constant(xyz, 1), Polynomial::variable(xyz, 0),
                                   Polynomial::variable(xyz, 1), Polynomial::variable(xyz, 2)};
      std::array<Polynomial, 4> xp;
      for (std::size_t k = 0; k < 4; ++k) {
        xp[k] = Polynomial(xyz);
        for (std::size_t i = 0; i < 4; ++i) xp[k] += Rational(a[i][k]) * xs[i];
      }
      int n = int(res.degree);
      Polynomial back(xyz);
      std::vector<Polynomial> h0{Polynomial::constant(xyz, 1)};
      for (int e = 1; e <= n; ++e) h0.push_back(h0.back() * xp[0]);
      for (const auto& term : chow.terms()) {
        Polynomial m = h0[n - int(term.mono.total_degree())] * term.coeff;
        for (std::size_t v = 0; v < 3; ++v)
          if (term.mono[v]) m *= xp[v + 1].pow(term.mono[v]);
        back += m;
      }
      chow = back;
    }
    res.chow = chow.canonical();
    return res;
  }
  throw Error(ErrorCode::ChartFailure, "no plane chart avoids every tritangent plane");
}

}  // namespace chull
