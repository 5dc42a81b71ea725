#include "chull/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "chull/algebra.hpp"
#include "chull/error.hpp"

namespace chull {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // coefficient i multiplies t^i, no trailing zero

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return int(a.size()) - 1; }

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

ModPoly reduce(const UPoly& f, u64 p) {
  ModPoly out(f.coeffs().size());
  Integer pp(static_cast<unsigned long>(p)), r;
  for (std::size_t i = 0; i < out.size(); ++i) {
    mpz_fdiv_r(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), pp.get_mpz_t());
    out[i] = r.get_ui();
  }
  trim(out);
  return out;
}

ModPoly sub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

ModPoly scale(const ModPoly& a, u64 c, u64 p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c % p;
  trim(r);
  return r;
}

void divmod(const ModPoly& a, const ModPoly& b, u64 p, ModPoly* q, ModPoly* r) {
  ModPoly rem = a;
  const int db = deg(b);
  const u64 inv = inv_mod(b.back(), p);
  ModPoly quot(std::max(0, deg(a) - db + 1), 0);
  while (deg(rem) >= db) {
    const std::size_t shift = std::size_t(deg(rem) - db);
    const u64 c = rem.back() * inv % p;
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] = (rem[shift + j] + p - c * b[j] % p) % p;
    trim(rem);
  }
  trim(quot);
  if (q) *q = std::move(quot);
  if (r) *r = std::move(rem);
}

ModPoly mod(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r;
  divmod(a, b, p, nullptr, &r);
  return r;
}

ModPoly monic(const ModPoly& a, u64 p) { return a.empty() ? a : scale(a, inv_mod(a.back(), p), p); }

ModPoly gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
void ext_gcd(const ModPoly& a, const ModPoly& b, u64 p, ModPoly* s, ModPoly* t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    divmod(r0, r1, p, &q, &r);
    ModPoly s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw Error(ErrorCode::InvalidArgument, "factors are not coprime modulo p");
  const u64 inv = inv_mod(r0[0], p);
  *s = scale(s0, inv, p);
  *t = scale(t0, inv, p);
}

ModPoly pow_mod_poly(ModPoly base, const Integer& e, const ModPoly& f, u64 p) {
  ModPoly result{1};
  base = mod(base, f, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(mul(result, result, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, base, p), f, p);
  }
  return result;
}

ModPoly derivative(const ModPoly& a, u64 p) {
  ModPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
  trim(r);
  return r;
}

// Distinct-degree then equal-degree factorization of a monic squarefree f.
std::vector<ModPoly> factor_mod_p(ModPoly f, u64 p) {
  std::vector<std::pair<ModPoly, int>> ddf;
  ModPoly x{0, 1}, h = x;
  const Integer pz(static_cast<unsigned long>(p));
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = pow_mod_poly(h, pz, f, p);
    ModPoly g = gcd(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      ddf.push_back({g, i});
      ModPoly q;
      divmod(f, g, p, &q, nullptr);
      f = std::move(q);
      h = mod(h, f, p);
    }
  }
  if (deg(f) > 0) ddf.push_back({f, deg(f)});

  std::mt19937_64 rng(12345);
  std::vector<ModPoly> out;
  for (auto& [g, d] : ddf) {
    std::vector<ModPoly> todo{g};
    Integer e;
    mpz_pow_ui(e.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    while (!todo.empty()) {
      ModPoly cur = std::move(todo.back());
      todo.pop_back();
      if (deg(cur) == d) {
        out.push_back(monic(cur, p));
        continue;
      }
      for (;;) {
        ModPoly a(std::size_t(deg(cur)));
        for (auto& c : a) c = rng() % p;
        trim(a);
        if (deg(a) < 1) continue;
        ModPoly b = pow_mod_poly(a, e, cur, p);
        b = sub(b, ModPoly{1}, p);
        ModPoly split = gcd(cur, b, p);
        if (deg(split) > 0 && deg(split) < deg(cur)) {
          ModPoly q;
          divmod(cur, split, p, &q, nullptr);
          todo.push_back(split);
          todo.push_back(monic(q, p));
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

UPoly from_mod(const ModPoly& a) {
  std::vector<Integer> v;
  for (auto c : a) v.emplace_back(static_cast<unsigned long>(c));
  return UPoly(std::move(v));
}

// Symmetric representative modulo m.
UPoly sym_mod(const UPoly& f, const Integer& m) {
  std::vector<Integer> v(f.coeffs().size());
  Integer half = m / 2;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_fdiv_r(v[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), m.get_mpz_t());
    if (v[i] > half) v[i] -= m;
  }
  return UPoly(std::move(v));
}

// Lifts f = g*h (mod p), g monic, to modulus p^k; h keeps lc(f).
void hensel_lift(const UPoly& f, const ModPoly& g0, const ModPoly& h0, u64 p, unsigned k, UPoly* g_out,
                 UPoly* h_out) {
  ModPoly s, t;
  ext_gcd(g0, h0, p, &s, &t);
  UPoly g = from_mod(g0);
  std::vector<Integer> hc = from_mod(h0).coeffs();
  hc.back() = f.lead();
  UPoly h(std::move(hc));
  Integer pe(static_cast<unsigned long>(p));
  const Integer pz(static_cast<unsigned long>(p));
  Integer modulus;
  mpz_pow_ui(modulus.get_mpz_t(), pz.get_mpz_t(), k);
  for (unsigned e = 1; e < k; ++e) {
    UPoly err = f - g * h;
    std::vector<Integer> cv(err.coeffs().size());
    for (std::size_t i = 0; i < cv.size(); ++i) {
      if (!mpz_divisible_p(err.coeffs()[i].get_mpz_t(), pe.get_mpz_t()))
        throw Error(ErrorCode::InvalidArgument, "Hensel lifting lost exactness");
      mpz_divexact(cv[i].get_mpz_t(), err.coeffs()[i].get_mpz_t(), pe.get_mpz_t());
    }
    ModPoly c = reduce(UPoly(std::move(cv)), p);
    ModPoly q, sigma;
    ModPoly hm = reduce(h, p);
    divmod(mul(c, s, p), hm, p, &q, &sigma);
    ModPoly qg = mul(q, reduce(g, p), p), ct = mul(c, t, p);
    ModPoly tau(std::max(ct.size(), qg.size()), 0);
    for (std::size_t i = 0; i < ct.size(); ++i) tau[i] = ct[i];
    for (std::size_t i = 0; i < qg.size(); ++i) tau[i] = (tau[i] + qg[i]) % p;
    trim(tau);
    g = g + from_mod(tau) * pe;
    h = h + from_mod(sigma) * pe;
    pe *= pz;
  }
  *g_out = sym_mod(g, modulus);
  *h_out = sym_mod(h, modulus);
}

// Lifts all modular factors (monic) of f to modulus p^k.
std::vector<UPoly> lift_all(const UPoly& f, std::vector<ModPoly> factors, u64 p, unsigned k) {
  std::vector<UPoly> out;
  UPoly cur = f;
  Integer modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), p, k);
  while (factors.size() > 1) {
    ModPoly g0 = factors.front();
    ModPoly rest = reduce(UPoly::constant(cur.lead()), p);
    for (std::size_t i = 1; i < factors.size(); ++i) rest = mul(rest, factors[i], p);
    UPoly g, h;
    hensel_lift(cur, g0, rest, p, k, &g, &h);
    out.push_back(g);
    cur = h;
    factors.erase(factors.begin());
  }
  // Last factor: make cur monic modulo p^k.
  Integer inv;
  Integer lc;
  mpz_fdiv_r(lc.get_mpz_t(), cur.lead().get_mpz_t(), modulus.get_mpz_t());
  mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  out.push_back(sym_mod(cur * inv, modulus));
  return out;
}

Integer coefficient_bound(const UPoly& f) {
  Integer maxc = 0;
  for (const auto& c : f.coeffs()) maxc = std::max(maxc, Integer(abs(c)));
  Integer b = maxc * abs(f.lead());
  Integer root;
  mpz_sqrt(root.get_mpz_t(), Integer(static_cast<unsigned long>(f.degree() + 1)).get_mpz_t());
  b *= root + 1;
  Integer two;
  mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(f.degree()));
  return b * two;
}

UPoly positive(UPoly f) { return f.lead() < 0 ? -f : f; }

// Recombines lifted factors into true factors by subset products.
std::vector<UPoly> recombine(UPoly f, std::vector<UPoly> lifted, const Integer& modulus) {
  std::vector<UPoly> out;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      UPoly cand = UPoly::constant(f.lead());
      for (auto i : idx) cand = sym_mod(cand * lifted[i], modulus);
      cand = cand.primitive();
      UPoly q;
      if (cand.degree() > 0 && UPoly::divides_exactly(f, cand, &q)) {
        out.push_back(positive(cand));
        f = q;
        for (std::size_t i = s; i-- > 0;) lifted.erase(lifted.begin() + long(idx[i]));
        found = true;
        break;
      }
      // Next combination.
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == lifted.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.degree() > 0) out.push_back(positive(f.primitive()));
  return out;
}

}  // namespace

std::vector<UPoly> factor_squarefree(const UPoly& input) {
  UPoly f = positive(input.primitive());
  std::vector<UPoly> out;
  if (f.degree() <= 0) return out;
  if (f[0] == 0) {
    out.push_back(UPoly::monomial(1));
    UPoly q;
    UPoly::divides_exactly(f, UPoly::monomial(1), &q);
    f = q;
    if (f.degree() <= 0) return out;
  }
  if (f.degree() == 1) {
    out.push_back(f);
    return out;
  }
  u64 p = 31;
  for (;; ++p) {
    if (!is_prime(p)) continue;
    ModPoly fp = reduce(f, p);
    if (deg(fp) != f.degree()) continue;
    if (deg(gcd(fp, derivative(fp, p), p)) == 0) break;
  }
  std::vector<ModPoly> mods = factor_mod_p(monic(reduce(f, p), p), p);
  if (mods.size() == 1) {
    out.push_back(f);
    return out;
  }
  Integer bound = 2 * coefficient_bound(f) + 1;
  unsigned k = 1;
  Integer modulus(static_cast<unsigned long>(p));
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(p);
    ++k;
  }
  std::vector<UPoly> lifted = lift_all(f, mods, p, k);
  for (auto& g : recombine(f, lifted, modulus)) out.push_back(g);
  return out;
}

Polynomial Factorization::expand(const RingPtr& ring) const {
  Polynomial out = Polynomial::constant(ring, unit);
  for (const auto& [f, m] : factors) out *= f.to_ring(ring).pow(m);
  return out;
}

namespace {

void sort_factors(Factorization& fz) {
  std::sort(fz.factors.begin(), fz.factors.end(), [](const auto& a, const auto& b) {
    int da = a.first.total_degree(), db = b.first.total_degree();
    if (da != db) return da < db;
    return a.first.to_string() < b.first.to_string();
  });
}

// Multiplicity of each irreducible factor by repeated exact division; the
// leftover constant becomes the unit.
Factorization collect(const Polynomial& f, const std::vector<Polynomial>& irreducible) {
  Factorization fz;
  Polynomial rest = f;
  for (const auto& q : irreducible) {
    unsigned m = 0;
    Polynomial next;
    while (try_exact_divide(rest, q, &next)) {
      rest = next;
      ++m;
    }
    if (m == 0) throw Error(ErrorCode::NotDivisible, "factor does not divide its input");
    fz.factors.push_back({q, m});
  }
  if (!rest.is_constant()) throw Error(ErrorCode::NotDivisible, "factorization left a nonconstant cofactor");
  fz.unit = rest.constant_term();
  sort_factors(fz);
  return fz;
}

std::size_t only_variable(const Polynomial& f) {
  std::uint32_t s = f.support();
  if (s == 0 || (s & (s - 1))) throw Error(ErrorCode::InvalidArgument, "expected a polynomial in one variable");
  return std::size_t(__builtin_ctz(s));
}

}  // namespace

Factorization factor_univariate(const Polynomial& f, unsigned degree_cap) {
  const std::size_t v = only_variable(f);
  if (unsigned(f.degree(v)) > degree_cap)
    throw Error(ErrorCode::DegreeCapExceeded, "degree " + std::to_string(f.degree(v)) + " above cap " +
                                                  std::to_string(degree_cap));
  UPoly u = UPoly::from_polynomial(f, v);
  std::vector<Polynomial> irreducible;
  for (const auto& part : u.squarefree_decomposition())
    for (const auto& q : factor_squarefree(part)) irreducible.push_back(q.to_polynomial(f.ring(), v).canonical());
  return collect(f, irreducible);
}

namespace {

// Irreducible factors of a squarefree form in two variables (a, b) with b
// not dividing it.
std::vector<Polynomial> factor_binary_form(const Polynomial& s, std::size_t a, std::size_t b) {
  const RingPtr& ring = s.ring();
  UPoly u = UPoly::from_polynomial(s.substitute(b, Polynomial::constant(ring, 1)), a);
  std::vector<Polynomial> out;
  for (const auto& q : factor_squarefree(u)) {
    // Homogenize with b.
    std::vector<Polynomial::Term> terms;
    for (std::size_t i = 0; i < q.coeffs().size(); ++i) {
      if (q.coeffs()[i] == 0) continue;
      Monomial m;
      m.exp[a] = std::uint8_t(i);
      m.exp[b] = std::uint8_t(q.degree() - int(i));
      terms.push_back({m, Rational(q.coeffs()[i])});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(terms)).canonical());
  }
  return out;
}

// Irreducible factors of a squarefree form in three variables with z not
// dividing it, via dehomogenization and Kronecker substitution b -> a^D.
std::vector<Polynomial> factor_ternary_form(const Polynomial& s, std::size_t a, std::size_t b, std::size_t z) {
  const RingPtr& ring = s.ring();
  const int da = s.degree(a);
  const unsigned D = unsigned(da) + 1;
  std::vector<Integer> coeffs;
  Rational k = s.integer_normalizer();
  for (const auto& t : s.terms()) {
    std::size_t e = t.mono[a] + std::size_t(D) * t.mono[b];
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] += Rational(t.coeff * k).get_num();
  }
  UPoly g(std::move(coeffs));
  // The image need not be squarefree; keep repeated factors as repeats.
  std::vector<UPoly> parts;
  std::vector<UPoly> layers = g.primitive().squarefree_decomposition();
  for (std::size_t i = 0; i < layers.size(); ++i)
    for (const auto& q : factor_squarefree(layers[i]))
      for (std::size_t r = 0; r <= i; ++r) parts.push_back(q);

  // Bivariate dehomogenized target, z = 1.
  Polynomial target = s.substitute(z, Polynomial::constant(ring, 1));
  auto inverse = [&](const UPoly& q, Polynomial* out) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t i = 0; i < q.coeffs().size(); ++i) {
      if (q.coeffs()[i] == 0) continue;
      Monomial m;
      m.exp[a] = std::uint8_t(i % D);
      m.exp[b] = std::uint8_t(i / D);
      terms.push_back({m, Rational(q.coeffs()[i])});
    }
    *out = Polynomial::from_terms(ring, std::move(terms));
    return true;
  };
  std::vector<Polynomial> result;
  std::size_t sz = 1;
  while (!parts.empty() && 2 * sz <= parts.size()) {
    bool found = false;
    std::vector<std::size_t> idx(sz);
    for (std::size_t i = 0; i < sz; ++i) idx[i] = i;
    for (;;) {
      UPoly cand = UPoly::constant(1);
      for (auto i : idx) cand = cand * parts[i];
      Polynomial h;
      Polynomial q;
      for (int sign = 0; sign < 2 && !found; ++sign) {
        inverse(sign ? -cand : cand, &h);
        if (h.is_constant()) break;
        if (try_exact_divide(target, h, &q)) {
          result.push_back(h);
          target = q;
          found = true;
        }
      }
      if (found) {
        for (std::size_t i = sz; i-- > 0;) parts.erase(parts.begin() + long(idx[i]));
        break;
      }
      std::size_t i = sz;
      while (i > 0 && idx[i - 1] == parts.size() - sz + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < sz; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++sz;
  }
  if (!target.is_constant()) result.push_back(target);
  // Homogenize each factor with z.
  std::vector<Polynomial> out;
  for (const auto& h : result) {
    const int dh = h.total_degree();
    std::vector<Polynomial::Term> terms;
    for (const auto& t : h.terms()) {
      Monomial m = t.mono;
      m.exp[z] = std::uint8_t(dh - int(t.mono.total_degree()));
      terms.push_back({m, t.coeff});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(terms)).canonical());
  }
  return out;
}

}  // namespace

Factorization factor_homogeneous(const Polynomial& f, unsigned degree_cap) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "cannot factor zero");
  if (!f.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "factor_homogeneous needs a form");
  if (unsigned(f.total_degree()) > degree_cap)
    throw Error(ErrorCode::DegreeCapExceeded, "degree " + std::to_string(f.total_degree()) + " above cap " +
                                                  std::to_string(degree_cap));
  const RingPtr& ring = f.ring();
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < ring->num_vars(); ++v)
    if (f.involves(v)) vars.push_back(v);
  if (vars.size() > 3) throw Error(ErrorCode::InvalidArgument, "factor_homogeneous handles at most three variables");

  std::vector<Polynomial> irreducible;
  Polynomial g = f;
  for (auto v : vars) {
    unsigned e = 255;
    for (const auto& t : f.terms()) e = std::min(e, t.mono[v]);
    if (e) {
      irreducible.push_back(Polynomial::variable(ring, v));
      g = exact_divide(g, Polynomial::monomial(ring, Monomial::variable(v, e)));
    }
  }
  if (!g.is_constant()) {
    Polynomial s = squarefree_part(g);
    std::vector<std::size_t> live;
    for (auto v : vars)
      if (s.involves(v)) live.push_back(v);
    if (live.size() == 1) {
      throw Error(ErrorCode::InvalidArgument, "unexpected monomial cofactor");
    } else if (live.size() == 2) {
      for (auto& q : factor_binary_form(s, live[0], live[1])) irreducible.push_back(q);
    } else {
      // Dehomogenize with respect to the variable of lowest degree.
      std::sort(live.begin(), live.end(), [&s](std::size_t x, std::size_t y) { return s.degree(x) < s.degree(y); });
      for (auto& q : factor_ternary_form(s, live[1], live[2], live[0])) irreducible.push_back(q);
    }
  }
  return collect(f, irreducible);
}

}  // namespace chull
