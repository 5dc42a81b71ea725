#include "chull/algebra.hpp"

#include <algorithm>
#include <map>

#include "chull/error.hpp"
#include "chull/poly_matrix.hpp"
#include "chull/upoly.hpp"

namespace chull {

namespace {

struct DescendingOrder {
  const Ring* ring;
  bool operator()(const Monomial& a, const Monomial& b) const { return ring->compare(a, b) > 0; }
};

}  // namespace

bool try_exact_divide(const Polynomial& f, const Polynomial& g, Polynomial* quotient) {
  require_same_ring(f, g);
  if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  const RingPtr& ring = f.ring();
  if (f.is_zero()) {
    if (quotient) *quotient = Polynomial(ring);
    return true;
  }
  if (g.is_constant()) {
    if (quotient) *quotient = f * Rational(1 / g.leading_coeff());
    return true;
  }
  for (std::size_t v = 0; v < ring->num_vars(); ++v)
    if (f.degree(v) < g.degree(v) && g.degree(v) > 0 && f.degree(v) >= 0) return false;

  std::map<Monomial, Rational, DescendingOrder> rem(DescendingOrder{ring.get()});
  for (const auto& t : f.terms()) rem.emplace_hint(rem.end(), t.mono, t.coeff);
  const auto& lead = g.leading_term();
  std::vector<Polynomial::Term> quot;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first)) return false;
    Monomial m = it->first / lead.mono;
    Rational c = it->second / lead.coeff;
    rem.erase(it);
    for (std::size_t i = 1; i < g.terms().size(); ++i) {
      const auto& t = g.terms()[i];
      Monomial key = t.mono * m;
      auto [pos, inserted] = rem.try_emplace(key, 0);
      pos->second -= c * t.coeff;
      if (pos->second == 0) rem.erase(pos);
    }
    quot.push_back({m, std::move(c)});
  }
  if (quotient) *quotient = Polynomial::from_terms(ring, std::move(quot));
  return true;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  Polynomial q;
  if (!try_exact_divide(f, g, &q)) throw Error(ErrorCode::NotDivisible, "remainder is nonzero");
  return q;
}

namespace {

using Coeffs = std::vector<Polynomial>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int deg(const Coeffs& a) { return int(a.size()) - 1; }

Coeffs prem(const Coeffs& a, const Coeffs& b) {
  Coeffs r = a;
  const Polynomial& lb = b.back();
  int db = deg(b);
  int e = deg(a) - db + 1;
  while (!r.empty() && deg(r) >= db) {
    Polynomial t = r.back();
    std::size_t shift = r.size() - 1 - std::size_t(db);
    for (auto& x : r) x = x * lb;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= t * b[j];
    r.pop_back();
    trim(r);
    --e;
  }
  if (e > 0 && !r.empty()) {
    Polynomial s = lb.pow(static_cast<unsigned>(e));
    for (auto& x : r) x = x * s;
  }
  return r;
}

Polynomial from_coeffs(const Coeffs& a, std::size_t var, const RingPtr& ring) {
  Polynomial out(ring);
  Polynomial v = Polynomial::variable(ring, var);
  for (std::size_t i = a.size(); i-- > 0;) {
    out = out * v + a[i];
  }
  return out;
}

Polynomial gcd_rec(const Polynomial& f, const Polynomial& g);

Polynomial content_coeffs(const Coeffs& c) {
  Polynomial acc;
  for (const auto& x : c) {
    if (x.is_zero()) continue;
    acc = acc.ring() ? gcd_rec(acc, x) : x.canonical();
    if (acc.is_constant()) break;
  }
  return acc;
}

Polynomial primitive_in(const Polynomial& f, std::size_t var) {
  Coeffs c = f.coefficients_in(var);
  Polynomial cont = content_coeffs(c);
  return exact_divide(f, cont);
}

Polynomial subresultant_gcd(const Polynomial& f, const Polynomial& g, std::size_t var) {
  const RingPtr& ring = f.ring();
  Coeffs a = f.coefficients_in(var), b = g.coefficients_in(var);
  if (deg(a) < deg(b)) std::swap(a, b);
  Polynomial gg = Polynomial::constant(ring, 1), h = Polynomial::constant(ring, 1);
  for (;;) {
    int delta = deg(a) - deg(b);
    Coeffs r = prem(a, b);
    if (r.empty()) break;
    if (deg(r) == 0) return Polynomial::constant(ring, 1);
    Polynomial divisor = gg * h.pow(static_cast<unsigned>(delta));
    for (auto& x : r) x = exact_divide(x, divisor);
    a = std::move(b);
    b = std::move(r);
    gg = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = gg;
    } else {
      h = exact_divide(gg.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  return primitive_in(from_coeffs(b, var, ring), var).canonical();
}

Polynomial gcd_rec(const Polynomial& f, const Polynomial& g) {
  const RingPtr& ring = f.ring();
  if (f.is_zero()) return g.canonical();
  if (g.is_zero()) return f.canonical();
  if (f.is_constant() || g.is_constant()) return Polynomial::constant(ring, 1);
  std::uint32_t sf = f.support(), sg = g.support();
  // A variable present in only one argument cannot occur in the gcd.
  for (std::size_t v = 0; v < ring->num_vars(); ++v) {
    std::uint32_t bit = 1u << v;
    if ((sf & bit) && !(sg & bit)) return gcd_rec(content_coeffs(f.coefficients_in(v)), g);
    if ((sg & bit) && !(sf & bit)) return gcd_rec(f, content_coeffs(g.coefficients_in(v)));
  }
  std::size_t best = 0;
  int best_deg = 1 << 30;
  for (std::size_t v = 0; v < ring->num_vars(); ++v) {
    if (!(sf & (1u << v))) continue;
    int d = std::max(f.degree(v), g.degree(v));
    if (d < best_deg) {
      best_deg = d;
      best = v;
    }
  }
  Polynomial cf = content_coeffs(f.coefficients_in(best));
  Polynomial cg = content_coeffs(g.coefficients_in(best));
  Polynomial c = gcd_rec(cf, cg);
  Polynomial pf = exact_divide(f, cf).canonical();
  Polynomial pg = exact_divide(g, cg).canonical();
  Polynomial h = subresultant_gcd(pf, pg, best);
  return (c * h).canonical();
}

}  // namespace

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (f.is_zero() && g.is_zero()) return f;
  return gcd_rec(f.canonical(), g.canonical()).canonical();
}

Polynomial content_in(const Polynomial& f, std::size_t var) {
  if (f.is_zero()) return f;
  return content_coeffs(f.canonical().coefficients_in(var));
}

namespace {

UPoly specialize(const Polynomial& f, std::size_t var, const std::vector<long>& values) {
  Rational k = f.integer_normalizer();
  std::vector<Integer> c(std::size_t(std::max(0, f.degree(var))) + 1);
  for (const auto& t : f.terms()) {
    Integer v = Rational(t.coeff * k).get_num();
    for (std::size_t i = 0; i < f.ring()->num_vars(); ++i) {
      if (i == var || !t.mono[i]) continue;
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(std::labs(values[i])), t.mono[i]);
      if (values[i] < 0 && (t.mono[i] & 1)) p = -p;
      v *= p;
    }
    c[t.mono[var]] += v;
  }
  return UPoly(std::move(c));
}

// True only when f is certainly squarefree: every variable admits a
// degree-preserving integer specialization whose univariate image is
// squarefree. Any repeated factor survives every such specialization.
bool certify_squarefree(const Polynomial& f) {
  const std::size_t n = f.ring()->num_vars();
  std::uint32_t supp = f.support();
  static const long kSamples[][3] = {{3, -5, 7}, {11, 2, -13}};
  for (std::size_t v = 0; v < n; ++v) {
    if (!(supp & (1u << v))) continue;
    bool ok = false;
    for (const auto& sample : kSamples) {
      std::vector<long> values(n, 0);
      for (std::size_t i = 0, j = 0; i < n; ++i)
        if (i != v) values[i] = sample[j++ % 3] + long(i);
      UPoly u = specialize(f, v, values);
      if (u.degree() != f.degree(v)) continue;
      if (UPoly::gcd(u, u.derivative()).degree() == 0) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "squarefree part of zero");
  Polynomial F = f.canonical();
  if (F.is_constant()) return Polynomial::constant(F.ring(), 1);
  if (certify_squarefree(F)) return F;
  Polynomial G = F;
  for (std::size_t v = 0; v < F.ring()->num_vars(); ++v) {
    if (!F.involves(v)) continue;
    G = gcd(G, F.derivative(v));
    if (G.is_constant()) break;
  }
  return exact_divide(F, G).canonical();
}

Polynomial pseudo_remainder(const Polynomial& f, const Polynomial& g, std::size_t var) {
  require_same_ring(f, g);
  if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "pseudo-remainder by zero");
  Coeffs a = f.coefficients_in(var), b = g.coefficients_in(var);
  if (deg(a) < deg(b)) return f;
  return from_coeffs(prem(a, b), var, f.ring());
}

Polynomial resultant(const Polynomial& f, const Polynomial& g, std::size_t var) {
  require_same_ring(f, g);
  int m = f.degree(var), n = g.degree(var);
  if (m <= 0 || n <= 0) throw Error(ErrorCode::DegreeZero, "resultant needs positive degree in the variable");
  Coeffs a = f.coefficients_in(var), b = g.coefficients_in(var);
  const std::size_t size = std::size_t(m + n);
  PolyMatrix s(f.ring(), size, size);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s(std::size_t(i), std::size_t(i + j)) = a[std::size_t(m - j)];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s(std::size_t(n + i), std::size_t(i + j)) = b[std::size_t(n - j)];
  return determinant(s);
}

Polynomial resultant(const Polynomial& f, const Polynomial& g, std::string_view var) {
  return resultant(f, g, f.ring()->index_of(var));
}

}  // namespace chull
