#include "chull/edgesurface.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <optional>
#include <random>
#include <mutex>
#include <thread>

#include "chull/algebra.hpp"
#include "chull/error.hpp"
#include "chull/factor.hpp"
#include "chull/lift.hpp"
#include "chull/poly_matrix.hpp"

namespace chull {

const RingPtr& pair_ring() {
  static const RingPtr ring = Ring::make({"xp0", "xp1", "xq0", "xq1"});
  return ring;
}

const RingPtr& invariant_ring() {
  static const RingPtr ring = Ring::make({"a", "b", "c"});
  return ring;
}

const RingPtr& plucker_ring() {
  static const RingPtr ring = Ring::make({"u01", "u02", "u03", "u12", "u13", "u23"});
  return ring;
}

const RingPtr& space_ring() {
  static const RingPtr ring = Ring::make({"x", "y", "z"});
  return ring;
}

namespace {

const std::array<const char*, 6> kPluckerNames{"u01", "u02", "u03", "u12", "u13", "u23"};

// Lex on (xp0, xp1, xq0, xq1), largest first.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    for (std::size_t i = 0; i < 4; ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

Polynomial swap_points(const Polynomial& f) {
  const RingPtr& r = pair_ring();
  std::array<Polynomial, 4> img{Polynomial::variable(r, 2), Polynomial::variable(r, 3), Polynomial::variable(r, 0),
                                Polynomial::variable(r, 1)};
  return f.substitute(r, img);
}

Polynomial at_point(const Polynomial& form, bool q) {
  const RingPtr& r = pair_ring();
  std::array<Polynomial, 2> img{Polynomial::variable(r, q ? 2 : 0), Polynomial::variable(r, q ? 3 : 1)};
  return form.substitute(r, img);
}

Polynomial diagonal_factor() { return parse_polynomial(pair_ring(), "xp0*xq1-xp1*xq0"); }

}  // namespace

Polynomial symmetrize(const Polynomial& f) {
  const RingPtr& r = pair_ring();
  Polynomial g = f.to_ring(r);
  const RingPtr& inv = invariant_ring();
  if (g.is_zero()) return Polynomial(inv);
  unsigned m = g.terms().front().mono[0] + g.terms().front().mono[1];
  for (const auto& t : g.terms())
    if (t.mono[0] + t.mono[1] != m || t.mono[2] + t.mono[3] != m)
      throw Error(ErrorCode::NotInInvariantRing, "polynomial is not bihomogeneous of bidegree (m, m)");
  if (swap_points(g) != g) throw Error(ErrorCode::NotSymmetric, "polynomial is not symmetric in p and q");

  std::vector<Polynomial> apow{Polynomial::constant(r, 1)}, bpow{apow[0]}, cpow{apow[0]};
  Polynomial a = parse_polynomial(r, "xp0*xq0"), b = parse_polynomial(r, "xp1*xq1"),
             c = parse_polynomial(r, "xp0*xq1+xp1*xq0");
  for (unsigned e = 1; e <= m; ++e) {
    apow.push_back(apow.back() * a);
    bpow.push_back(bpow.back() * b);
    cpow.push_back(cpow.back() * c);
  }

  // The lex-leading monomial of a^i b^j c^k is xp0^(i+k) xp1^j xq0^i xq1^(j+k),
  // so the system is triangular in this order.
  std::map<Monomial, Rational, LexGreater> rest;
  for (const auto& t : g.terms()) rest.emplace(t.mono, t.coeff);
  std::vector<Polynomial::Term> out;
  while (!rest.empty()) {
    auto [lm, lc] = *rest.begin();
    if (lm[0] < lm[2]) throw Error(ErrorCode::NotInInvariantRing, "polynomial is not a polynomial in a, b, c");
    unsigned i = lm[2], j = lm[1], k = lm[0] - lm[2];
    Monomial abc;
    abc.exp[0] = std::uint8_t(i);
    abc.exp[1] = std::uint8_t(j);
    abc.exp[2] = std::uint8_t(k);
    out.push_back({abc, lc});
    Polynomial sub = apow[i] * bpow[j] * cpow[k];
    for (const auto& t : sub.terms()) {
      auto [it, fresh] = rest.emplace(t.mono, -lc * t.coeff);
      if (!fresh) {
        it->second -= lc * t.coeff;
        if (it->second == 0) rest.erase(it);
      }
    }
  }
  return Polynomial::from_terms(inv, std::move(out));
}

Polynomial SecantCoordinates::plucker() const { return u[0] * u[5] - u[1] * u[4] + u[2] * u[3]; }

SecantCoordinates secant_coordinates(const ProjectiveCurve& c) {
  std::array<Polynomial, 4> fp, fq;
  for (std::size_t i = 0; i < 4; ++i) {
    fp[i] = at_point(c.form(i), false);
    fq[i] = at_point(c.form(i), true);
  }
  Polynomial delta = diagonal_factor();
  SecantCoordinates sc;
  sc.degree = c.degree() - 1;
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      Polynomial minor = fp[i] * fq[j] - fp[j] * fq[i];
      sc.u[k++] = symmetrize(exact_divide(minor, delta));
    }
  return sc;
}

Polynomial stationary_form(const ProjectiveCurve& c) {
  const RingPtr& r = pair_ring();
  PolyMatrix m(r, 4, 4);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t v = 0; v < 2; ++v) {
      Polynomial dv = c.form(j).derivative(v);
      m(v, j) = at_point(dv, false);
      m(2 + v, j) = at_point(dv, true);
    }
  Polynomial det = determinant(m);
  if (det.is_zero()) throw Error(ErrorCode::ZeroDeterminant, "tangent lines are pairwise coplanar (planar curve)");
  Polynomial q = exact_divide(det, diagonal_factor().pow(4));
  return symmetrize(q).canonical();
}

namespace {

// Rows of the skew matrix applied to (w, x, y, z).
std::array<Polynomial, 4> skew_rows(const std::array<Polynomial, 6>& u, const std::array<Polynomial, 4>& pt) {
  const auto& [u01, u02, u03, u12, u13, u23] = u;
  return {u23 * pt[1] - u13 * pt[2] + u12 * pt[3], -u23 * pt[0] + u03 * pt[2] - u02 * pt[3],
          u13 * pt[0] - u03 * pt[1] + u01 * pt[3], -u12 * pt[0] + u02 * pt[1] - u01 * pt[2]};
}

// Index of the sparsest U_jk that does not vanish on {phi_factor = 0}.
std::size_t pick_chart(const SecantCoordinates& sc, const Polynomial& phi_factor) {
  std::size_t best = 6;
  for (std::size_t k = 0; k < 6; ++k) {
    if (sc.u[k].is_zero()) continue;
    Polynomial q;
    if (try_exact_divide(sc.u[k], phi_factor, &q)) continue;
    if (best == 6 || sc.u[k].size() < sc.u[best].size()) best = k;
  }
  if (best == 6) throw Error(ErrorCode::DegenerateSpec, "every secant coordinate vanishes on a factor of Phi");
  return best;
}

void finish(EdgeComponent& comp, const Ideal& homogeneous) {
  const RingPtr& xyz = space_ring();
  comp.ideal = homogeneous;
  const RingPtr& h = homogeneous.ring();
  std::array<Polynomial, 4> img{Polynomial::constant(xyz, 1), Polynomial::variable(xyz, 0), Polynomial::variable(xyz, 1),
                                Polynomial::variable(xyz, 2)};
  std::vector<Polynomial> affine;
  for (const auto& g : homogeneous.generators()) {
    Polynomial a = g.substitute(xyz, std::span<const Polynomial>(img.data(), h->num_vars()));
    if (!a.is_zero()) affine.push_back(a);
  }
  if (affine.empty()) throw Error(ErrorCode::DegenerateSpec, "elimination ideal is zero");
  Polynomial g(xyz);
  for (const auto& a : affine) g = gcd(g, a);
  comp.status = affine.size() == 1 ? ComponentStatus::Done : ComponentStatus::NonPrincipal;
  if (g.is_constant()) {
    comp.surface = Polynomial(xyz);
    comp.raw_degree = comp.degree = 0;
    comp.status = ComponentStatus::NonPrincipal;
    return;
  }
  comp.raw_degree = g.total_degree();
  comp.surface = squarefree_part(g);
  comp.degree = comp.surface.total_degree();
  comp.reduced = comp.degree == comp.raw_degree;
}

// Homogeneous ideal in (w, x, y, z) of the secant lines over {phi_factor = 0}.
Ideal grassmannian_elimination(const SecantCoordinates& sc, const Polynomial& phi_factor,
                               const GroebnerOptions& options) {
  Ideal image = grassmannian_image(sc, phi_factor, options);
  std::size_t chart = pick_chart(sc, phi_factor);

  RingPtr ring = Ring::make({"u01", "u02", "u03", "u12", "u13", "u23", "w", "x", "y", "z"});
  std::array<Polynomial, 6> u;
  for (std::size_t k = 0; k < 6; ++k) u[k] = Polynomial::variable(ring, k);
  std::array<Polynomial, 4> pt;
  for (std::size_t k = 0; k < 4; ++k) pt[k] = Polynomial::variable(ring, 6 + k);
  std::vector<Polynomial> gens;
  for (const auto& g : image.generators()) gens.push_back(g.to_ring(ring));
  for (auto& row : skew_rows(u, pt)) gens.push_back(std::move(row));
  std::vector<std::string> drop(kPluckerNames.begin(), kPluckerNames.end());
  // Everything is homogeneous in the u's, so saturating by u_jk and
  // eliminating is the same as eliminating on the chart u_jk = 1.
  std::vector<Polynomial> img(ring->num_vars());
  for (std::size_t k = 0; k < img.size(); ++k) img[k] = Polynomial::variable(ring, k);
  img[chart] = Polynomial::constant(ring, 1);
  for (auto& g : gens) g = g.substitute(ring, img);
  return eliminate(Ideal(ring, std::move(gens)), drop, options);
}

Ideal direct_elimination(const SecantCoordinates& sc, const Polynomial& phi_factor, const GroebnerOptions& options) {
  std::size_t chart = pick_chart(sc, phi_factor);

  RingPtr ring = Ring::make({"a", "b", "c", "t", "w", "x", "y", "z"});
  std::array<Polynomial, 6> u;
  for (std::size_t k = 0; k < 6; ++k) u[k] = sc.u[k].to_ring(ring);
  std::array<Polynomial, 4> pt;
  for (std::size_t k = 0; k < 4; ++k) pt[k] = Polynomial::variable(ring, 4 + k);
  std::vector<Polynomial> gens{phi_factor.to_ring(ring)};
  for (auto& row : skew_rows(u, pt)) gens.push_back(std::move(row));
  gens.push_back(Polynomial::constant(ring, 1) - Polynomial::variable(ring, 3) * u[chart]);
  return eliminate(Ideal(ring, std::move(gens)), {"a", "b", "c", "t"}, options);
}

Ideal elimination(EdgeRoute route, const SecantCoordinates& sc, const Polynomial& phi_factor,
                  const GroebnerOptions& options) {
  return route == EdgeRoute::Grassmannian ? grassmannian_elimination(sc, phi_factor, options)
                                          : direct_elimination(sc, phi_factor, options);
}

Integer previous_prime(Integer p) {
  do {
    --p;
  } while (!mpz_probab_prime_p(p.get_mpz_t(), 30));
  return p;
}

// Runs the elimination modulo primes below 2^62 and lifts the reduced basis. A
// lift is accepted once it reproduces the image modulo a further prime.
Ideal modular_elimination(EdgeRoute route, const SecantCoordinates& sc, const Polynomial& phi_factor,
                          const GroebnerOptions& options, unsigned max_primes) {
  Integer p = Integer(1) << 62;
  Lifter lifter;
  RingPtr ring;
  for (unsigned attempt = 0; attempt < max_primes; ++attempt) {
    p = previous_prime(p);
    GroebnerOptions o = options;
    o.modulus = p.get_ui();
    Ideal image;
    try {
      image = elimination(route, sc, phi_factor, o);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidArgument) continue;
      throw;
    }
    if (!ring) ring = image.ring();
    if (lifter.add(modular_image(image, p), p)) return Ideal(ring, lifter.result(ring));
  }
  throw Error(ErrorCode::ResourceLimit, "modular lift did not stabilize within " + std::to_string(max_primes) + " primes");
}

// Arithmetic modulo a prime below 2^25, so that 2^14 products of residues can
// be summed in 64 bits.
struct Fp {
  std::uint64_t p;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
  std::uint64_t of(const Rational& q) const {
    Integer n = q.get_num() % Integer(static_cast<unsigned long>(p)), d = q.get_den() % Integer(static_cast<unsigned long>(p));
    long nn = n.get_si(), dd = d.get_si();
    std::uint64_t num = std::uint64_t(nn < 0 ? nn + long(p) : nn), den = std::uint64_t(dd);
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "denominator divisible by the modulus");
    return mul(num, inv(den));
  }
};

// Dense univariate polynomials over F_p, constant term first.
using UPolyP = std::vector<std::uint64_t>;

void trim(UPolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void make_monic(UPolyP& a, const Fp& f) {
  trim(a);
  if (a.empty() || a.back() == 1) return;
  std::uint64_t k = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, k);
}

// Remainder and, if wanted, quotient of a by b.
UPolyP poly_rem(UPolyP a, const UPolyP& b, const Fp& f, UPolyP* quot = nullptr) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead = f.inv(b.back());
  if (quot) quot->assign(a.size() > db ? a.size() - db : 0, 0);
  while (a.size() > db) {
    std::uint64_t k = f.mul(a.back(), lead);
    std::size_t shift = a.size() - 1 - db;
    if (quot) (*quot)[shift] = k;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(k, b[i]));
    trim(a);
  }
  return a;
}

UPolyP mul_mod(const UPolyP& a, const UPolyP& b, const UPolyP& m, const Fp& f) {
  if (a.empty() || b.empty()) return {};
  UPolyP c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  return poly_rem(std::move(c), m, f);
}

UPolyP pow_mod(UPolyP base, std::uint64_t e, const UPolyP& m, const Fp& f) {
  UPolyP r{1};
  base = poly_rem(std::move(base), m, f);
  for (; e; e >>= 1, base = mul_mod(base, base, m, f))
    if (e & 1) r = mul_mod(r, base, m, f);
  return r;
}

UPolyP poly_gcd(UPolyP a, UPolyP b, const Fp& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPolyP r = poly_rem(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a, f);
  return a;
}

// Roots of a monic product of distinct linear factors, by equal-degree splitting.
void split_roots(const UPolyP& g, const Fp& f, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
  if (g.size() < 2) return;
  if (g.size() == 2) {
    out.push_back(f.sub(0, g[0]));
    return;
  }
  for (;;) {
    UPolyP h = pow_mod({rng() % f.p, 1}, (f.p - 1) / 2, g, f);
    if (h.empty()) h = {0};
    h[0] = f.sub(h[0], 1);
    UPolyP d = poly_gcd(g, h, f);
    if (d.size() < 2 || d.size() == g.size()) continue;
    UPolyP q;
    poly_rem(g, d, f, &q);
    split_roots(d, f, rng, out);
    split_roots(q, f, rng, out);
    return;
  }
}

std::vector<std::uint64_t> roots_mod(UPolyP a, const Fp& f, std::mt19937_64& rng) {
  std::vector<std::uint64_t> out;
  make_monic(a, f);
  if (a.size() < 2) return out;
  UPolyP xp = pow_mod({0, 1}, f.p, a, f);
  xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
  xp[1] = f.sub(xp[1], 1);
  split_roots(poly_gcd(a, xp, f), f, rng, out);
  return out;
}

struct TermP {
  std::array<unsigned, 3> e;
  std::uint64_t c;
};

std::vector<TermP> terms_mod(const Polynomial& g, const Fp& f) {
  std::vector<TermP> out;
  for (const auto& t : g.terms()) out.push_back({{t.mono[0], t.mono[1], t.mono[2]}, f.of(t.coeff)});
  return out;
}

// Points of the ruled surface over {phi_factor = 0} with coordinates in F_p.
class SurfaceSampler {
 public:
  SurfaceSampler(const SecantCoordinates& sc, const Polynomial& phi_factor, const Fp& f)
      : f_(f), rng_(f.p), phi_(terms_mod(phi_factor, f)) {
    for (std::size_t k = 0; k < 6; ++k) u_[k] = terms_mod(sc.u[k], f);
  }

  // Affine point (x, y, z) on a secant line over the curve {phi = 0}.
  std::array<std::uint64_t, 3> next() {
    for (;;) {
      if (lines_.empty()) refill();
      const auto u = lines_.back();
      if (++uses_ >= 2) {
        lines_.pop_back();
        uses_ = 0;
      }
      // Primal Pluecker matrix times a random plane.
      std::array<std::uint64_t, 4> xi;
      for (auto& v : xi) v = rng_() % f_.p;
      const std::size_t pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
      std::array<std::uint64_t, 4> x{0, 0, 0, 0};
      for (std::size_t k = 0; k < 6; ++k) {
        auto [i, j] = pairs[k];
        x[i] = f_.add(x[i], f_.mul(u[k], xi[j]));
        x[j] = f_.sub(x[j], f_.mul(u[k], xi[i]));
      }
      if (x[0] == 0) continue;
      std::uint64_t w = f_.inv(x[0]);
      return {f_.mul(x[1], w), f_.mul(x[2], w), f_.mul(x[3], w)};
    }
  }

 private:
  static UPolyP mul(const UPolyP& a, const UPolyP& b, const Fp& f) {
    UPolyP c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
    return c;
  }

  // Lines over the points where a random line in the (a, b, c) plane meets
  // {phi = 0}.
  void refill() {
    while (lines_.empty()) {
      std::array<UPolyP, 3> coord;
      for (auto& l : coord) l = {rng_() % f_.p, rng_() % f_.p};
      std::array<std::vector<UPolyP>, 3> pw;
      auto power = [&](std::size_t v, unsigned e) -> const UPolyP& {
        auto& cache = pw[v];
        if (cache.empty()) cache.push_back({1});
        while (cache.size() <= e) cache.push_back(mul(cache.back(), coord[v], f_));
        return cache[e];
      };
      UPolyP g;
      for (const auto& t : phi_) {
        UPolyP m = mul(mul(power(0, t.e[0]), power(1, t.e[1]), f_), power(2, t.e[2]), f_);
        if (g.size() < m.size()) g.resize(m.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) g[i] = f_.add(g[i], f_.mul(t.c, m[i]));
      }
      for (std::uint64_t s : roots_mod(g, f_, rng_)) {
        std::array<std::uint64_t, 3> abc;
        for (std::size_t v = 0; v < 3; ++v) abc[v] = f_.add(coord[v][0], f_.mul(coord[v][1], s));
        std::array<std::uint64_t, 6> u;
        bool zero = true;
        for (std::size_t k = 0; k < 6; ++k) {
          u[k] = 0;
          for (const auto& t : u_[k])
            u[k] = f_.add(u[k], f_.mul(t.c, f_.mul(f_.pow(abc[0], t.e[0]),
                                                     f_.mul(f_.pow(abc[1], t.e[1]), f_.pow(abc[2], t.e[2])))));
          zero = zero && u[k] == 0;
        }
        if (!zero) lines_.push_back(u);
      }
    }
  }

  Fp f_;
  std::mt19937_64 rng_;
  std::vector<TermP> phi_;
  std::array<std::vector<TermP>, 6> u_;
  std::vector<std::array<std::uint64_t, 6>> lines_;
  unsigned uses_ = 0;
};

// Row echelon form over F_p with rows inserted one at a time. Pivot rows are
// normalized and stored from their pivot column on.
class Echelon {
 public:
  Echelon(std::size_t n, const Fp& f) : n_(n), f_(f), piv_(n) {}

  std::size_t rank() const { return rank_; }

  // False when the row reduces to zero.
  bool insert(std::vector<std::uint64_t> row) {
    for (std::size_t c = 0; c < n_; ++c) {
      std::uint64_t v = row[c] % f_.p;
      if (v == 0) continue;
      const auto& pr = piv_[c];
      if (pr.empty()) {
        std::uint64_t k = f_.inv(v);
        std::vector<std::uint32_t> stored(n_ - c);
        for (std::size_t j = c; j < n_; ++j) stored[j - c] = std::uint32_t(f_.mul(row[j] % f_.p, k));
        piv_[c] = std::move(stored);
        ++rank_;
        return true;
      }
      const std::uint64_t m = f_.p - v;
      std::uint64_t* r = row.data() + c;
      const std::uint32_t* q = pr.data();
      for (std::size_t j = 1, len = n_ - c; j < len; ++j) r[j] += m * q[j];
    }
    return false;
  }

  // Kernel vector when the kernel is one-dimensional, else empty.
  std::vector<std::uint64_t> kernel() const {
    if (rank_ + 1 != n_) return {};
    std::vector<std::uint64_t> v(n_, 0);
    for (std::size_t c = n_; c-- > 0;) {
      if (piv_[c].empty()) {
        v[c] = 1;
        continue;
      }
      std::uint64_t s = 0;
      for (std::size_t j = c + 1; j < n_; ++j)
        if (v[j]) s = f_.add(s, f_.mul(piv_[c][j - c], v[j]));
      v[c] = f_.sub(0, s);
    }
    return v;
  }

 private:
  std::size_t n_;
  Fp f_;
  std::vector<std::vector<std::uint32_t>> piv_;
  std::size_t rank_ = 0;
};

constexpr unsigned kMaxInterpolationDegree = 30;

std::vector<Monomial> monomials_up_to(unsigned d) {
  std::vector<Monomial> out;
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned j = 0; i + j <= d; ++j)
      for (unsigned k = 0; i + j + k <= d; ++k) {
        Monomial m;
        m.exp[0] = std::uint8_t(i);
        m.exp[1] = std::uint8_t(j);
        m.exp[2] = std::uint8_t(k);
        out.push_back(m);
      }
  const Ring& r = *space_ring();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return r.compare(a, b) > 0; });
  return out;
}

// Equation of degree d of the surface modulo p, from the kernel of the
// evaluation matrix at sampled points. Empty when the kernel is zero or not
// one-dimensional.
std::vector<std::uint64_t> surface_mod(SurfaceSampler& sampler, const std::vector<Monomial>& mons, const Fp& f,
                                       bool* full_rank) {
  const std::size_t n = mons.size();
  unsigned d = 0;
  for (const auto& m : mons) d = std::max(d, m.total_degree());
  Echelon ech(n, f);
  std::vector<std::uint64_t> row(n);
  std::array<std::vector<std::uint64_t>, 3> pw;
  // The kernel is trusted after this many consecutive dependent rows.
  const unsigned confirm = 24;
  for (unsigned zeros = 0; ech.rank() < n && zeros < confirm;) {
    auto pt = sampler.next();
    for (std::size_t v = 0; v < 3; ++v) {
      pw[v].assign(d + 1, 1);
      for (unsigned e = 1; e <= d; ++e) pw[v][e] = f.mul(pw[v][e - 1], pt[v]);
    }
    for (std::size_t i = 0; i < n; ++i) row[i] = f.mul(f.mul(pw[0][mons[i][0]], pw[1][mons[i][1]]), pw[2][mons[i][2]]);
    zeros = ech.insert(row) ? 0 : zeros + 1;
  }
  *full_rank = ech.rank() == n;
  return ech.kernel();
}

ModularImage image_of(const std::vector<Monomial>& mons, const std::vector<std::uint64_t>& v, const Fp& f) {
  ModularImage img;
  img.support.emplace_back();
  img.coef.emplace_back();
  std::uint64_t lead = 0;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (!v[i]) continue;
    if (!lead) lead = f.inv(v[i]);
    img.support[0].push_back(mons[i]);
    img.coef[0].push_back(Integer(static_cast<unsigned long>(f.mul(v[i], lead))));
  }
  return img;
}

// Reduced equation of the surface swept by the secant lines over
// {phi_factor = 0}, by interpolation modulo primes below 2^25 and lifting.
Polynomial interpolated_surface(const SecantCoordinates& sc, const Polynomial& phi_factor, unsigned max_primes) {
  Integer p = Integer(1) << 25;
  Lifter lifter;
  unsigned degree = 0;
  std::vector<Monomial> mons;
  for (unsigned attempt = 0; attempt < max_primes; ++attempt) {
    p = previous_prime(p);
    Fp f{p.get_ui()};
    std::optional<SurfaceSampler> sampler;
    try {
      sampler.emplace(sc, phi_factor, f);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidArgument) continue;
      throw;
    }
    std::vector<std::uint64_t> v;
    bool full = false;
    if (degree == 0) {
      for (unsigned d = 1; d <= kMaxInterpolationDegree && degree == 0; ++d) {
        mons = monomials_up_to(d);
        v = surface_mod(*sampler, mons, f, &full);
        if (!full) {
          if (v.empty()) break;
          degree = d;
        }
      }
      if (degree == 0) {
        if (!full) continue;
        throw Error(ErrorCode::ResourceLimit,
                    "edge surface degree exceeds " + std::to_string(kMaxInterpolationDegree));
      }
    } else {
      v = surface_mod(*sampler, mons, f, &full);
      if (v.empty()) continue;
    }
    if (lifter.add(image_of(mons, v, f), p)) return lifter.result(space_ring()).front();
  }
  throw Error(ErrorCode::ResourceLimit, "interpolation did not stabilize within " + std::to_string(max_primes) + " primes");
}

EdgeComponent route_component(const SecantCoordinates& sc, const Polynomial& phi_factor, const EdgeOptions& options) {
  EdgeComponent comp;
  comp.phi_factor = phi_factor;
  if (options.route == EdgeRoute::Interpolation) {
    comp.surface = interpolated_surface(sc, phi_factor, options.max_primes);
    comp.raw_degree = comp.degree = comp.surface.total_degree();
    comp.ideal = Ideal(space_ring(), {comp.surface});
    return comp;
  }
  finish(comp, options.modular ? modular_elimination(options.route, sc, phi_factor, options.groebner, options.max_primes)
                               : elimination(options.route, sc, phi_factor, options.groebner));
  return comp;
}

}  // namespace

Ideal grassmannian_image(const SecantCoordinates& sc, const Polynomial& phi_factor, const GroebnerOptions& options) {
  RingPtr ring = Ring::make({"a", "b", "c", "u01", "u02", "u03", "u12", "u13", "u23"});
  std::vector<Polynomial> gens{phi_factor.to_ring(ring)};
  for (std::size_t k = 0; k < 6; ++k) gens.push_back(Polynomial::variable(ring, 3 + k) - sc.u[k].to_ring(ring));
  WeightMap weights;
  for (const char* n : kPluckerNames) weights[n] = unsigned(std::max(sc.degree, 1));
  Ideal out = eliminate(Ideal(ring, std::move(gens)), {"a", "b", "c"}, options, weights);
  return Ideal(plucker_ring(), [&] {
    std::vector<Polynomial> g;
    for (const auto& p : out.generators()) g.push_back(p.to_ring(plucker_ring()));
    return g;
  }());
}

EdgeComponent edge_component(const SecantCoordinates& sc, const Polynomial& phi_factor, const EdgeOptions& options) {
  Polynomial phi = phi_factor.to_ring(invariant_ring());
  try {
    return route_component(sc, phi, options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ResourceLimit) throw;
    EdgeComponent comp;
    comp.phi_factor = phi;
    comp.surface = Polynomial(space_ring());
    comp.status = ComponentStatus::ResourceLimit;
    return comp;
  }
}

std::vector<EdgeComponent> edge_components(const ProjectiveCurve& c, const EdgeOptions& options) {
  Polynomial phi = stationary_form(c);
  if (phi.is_constant()) return {};
  Factorization fz = factor_homogeneous(phi, 64);
  SecantCoordinates sc = secant_coordinates(c);
  std::vector<EdgeComponent> out(fz.factors.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto work = [&] {
    for (std::size_t k; (k = next++) < out.size();) {
      try {
        out[k] = edge_component(sc, fz.factors[k].first, options);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned threads = std::max(1u, std::min<unsigned>(options.threads, unsigned(out.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

Polynomial pencil_edge_surface(const QuadricPencilSpec& p) {
  p.validate();
  RingPtr ring = Ring::make({"t", "x", "y", "z"});
  Polynomial t = Polynomial::variable(ring, 0);
  PolyMatrix m(ring, 4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = Polynomial::constant(ring, p.q1[i][j]) + p.q2[i][j] * t;
  Polynomial f = determinant(m);
  if (f.degree(0) != 4) throw Error(ErrorCode::DegeneratePencil, "det(Q1 + t Q2) must have degree 4 in t");
  std::array<Polynomial, 4> pt{Polynomial::constant(ring, 1), Polynomial::variable(ring, 1),
                               Polynomial::variable(ring, 2), Polynomial::variable(ring, 3)};
  Polynomial q(ring);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) q += m(i, j) * pt[i] * pt[j];
  return resultant(f, q, 0).to_ring(space_ring()).canonical();
}

}  // namespace chull
