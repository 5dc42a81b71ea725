#include "chull/groebner.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "chull/algebra.hpp"
#include "chull/error.hpp"

namespace chull {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!(*g.ring() == *ring_)) {
      if (!g.ring()->same_variables(*ring_))
        throw Error(ErrorCode::RingMismatch, "ideal generator from a different ring");
      g = g.to_ring(ring_);
    }
    gens_.push_back(std::move(g));
  }
}

std::string Ideal::to_string() const {
  std::string out;
  for (const auto& g : gens_) out += g.canonical().to_string() + "\n";
  return out;
}

namespace {

using Residue = std::uint64_t;

// Polynomial sorted by decreasing monomial under the working order; integer
// coefficients, or residues modulo a prime.
template <class C>
struct GPoly {
  std::vector<Monomial> mono;
  std::vector<C> coef;
  unsigned sugar = 0;
  std::uint32_t mask = 0;

  std::size_t size() const { return mono.size(); }
  bool empty() const { return mono.empty(); }
  const Monomial& lm() const { return mono.front(); }
};

Residue mul_mod(Residue a, Residue b, Residue p) { return static_cast<Residue>((unsigned __int128)a * b % p); }

Residue pow_mod(Residue a, Residue e, Residue p) {
  Residue r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a, p))
    if (e & 1) r = mul_mod(r, a, p);
  return r;
}

Residue inv_mod(Residue a, Residue p) { return pow_mod(a, p - 2, p); }

Residue to_residue(const Integer& z, Residue p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

void make_primitive(GPoly<Integer>& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& c : p.coef) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.coef.front() < 0) g = -g;
  if (g != 1)
    for (auto& c : p.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  p.mask = p.lm().support_mask();
}

void make_monic(GPoly<Residue>& f, Residue p) {
  if (f.empty()) return;
  if (f.coef[0] != 1) {
    Residue k = inv_mod(f.coef[0], p);
    for (auto& c : f.coef) c = mul_mod(c, k, p);
  }
  f.mask = f.lm().support_mask();
}

GPoly<Integer> to_gpoly(const Polynomial& f) {
  GPoly<Integer> p;
  Rational k = f.integer_normalizer();
  p.mono.reserve(f.size());
  p.coef.reserve(f.size());
  for (const auto& t : f.terms()) {
    p.mono.push_back(t.mono);
    p.coef.push_back(Rational(t.coeff * k).get_num());
  }
  make_primitive(p);
  return p;
}

GPoly<Residue> to_gpoly(const Polynomial& f, Residue p) {
  GPoly<Residue> out;
  for (const auto& t : f.terms()) {
    Residue den = to_residue(t.coeff.get_den(), p);
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "denominator divisible by the modulus");
    Residue c = mul_mod(to_residue(t.coeff.get_num(), p), inv_mod(den, p), p);
    if (c == 0) continue;
    out.mono.push_back(t.mono);
    out.coef.push_back(c);
  }
  make_monic(out, p);
  return out;
}

template <class C>
Polynomial from_gpoly(const RingPtr& ring, const GPoly<C>& p) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if constexpr (std::is_same_v<C, Integer>)
      terms.push_back({p.mono[i], Rational(p.coef[i])});
    else
      terms.push_back({p.mono[i], Rational(Integer(static_cast<unsigned long>(p.coef[i])))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

struct Pair {
  int i;  // -1 marks an input generator, j then indexes the inputs
  int j;
  Monomial lcm;
  unsigned sugar;
};

template <class C>
class Engine {
 public:
  Engine(RingPtr ring, const GroebnerOptions& options) : ring_(std::move(ring)), r_(*ring_), opt_(options),
        p_(options.modulus), queue_(PairLess{&r_}) {}

  std::vector<Polynomial> run(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens) {
      GPoly<C> p = convert(g);
      if (p.empty()) continue;
      p.sugar = poly_degree(p);
      inputs_.push_back(std::move(p));
      const GPoly<C>& q = inputs_.back();
      queue_.insert({-1, int(inputs_.size() - 1), q.lm(), q.sugar});
    }
    std::size_t processed = 0;
    while (!queue_.empty()) {
      Pair pair = *queue_.begin();
      queue_.erase(queue_.begin());
      if (opt_.max_degree && pair.sugar > opt_.max_degree) break;
      if (opt_.max_pairs && processed >= opt_.max_pairs)
        throw Error(ErrorCode::ResourceLimit, "S-pair budget of " + std::to_string(opt_.max_pairs) + " exhausted");
      ++processed;
      if (opt_.heartbeat && processed % std::max<std::size_t>(1, opt_.heartbeat_every) == 0)
        opt_.heartbeat({processed, queue_.size(), basis_.size(), pair.sugar});
      GPoly<C> h = pair.i < 0 ? inputs_[std::size_t(pair.j)] : spoly(pair);
      reduce(h, true);
      if (h.empty()) continue;
      if (h.lm().is_one()) {
        basis_.clear();
        redundant_.clear();
        h.coef = {C(1)};
        basis_.push_back(std::move(h));
        redundant_.push_back(false);
        break;
      }
      insert(std::move(h));
    }
    return interreduce();
  }

 private:
  static constexpr bool kModular = std::is_same_v<C, Residue>;

  struct PairLess {
    const Ring* r;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = r->compare(a.lcm, b.lcm);
      if (c) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  GPoly<C> convert(const Polynomial& f) const {
    if constexpr (kModular)
      return to_gpoly(f, p_);
    else
      return to_gpoly(f);
  }

  void normalize(GPoly<C>& f) const {
    if constexpr (kModular)
      make_monic(f, p_);
    else
      make_primitive(f);
  }

  unsigned poly_degree(const GPoly<C>& p) const {
    unsigned d = 0;
    for (const auto& m : p.mono) d = std::max(d, r_.weighted_degree(m));
    return d;
  }

  // out = x - c*(m*y) over the tails x[from_x..], y[from_y..], modulo p.
  void merge_mod(const GPoly<C>& x, std::size_t from_x, Residue c, const GPoly<C>& y, std::size_t from_y,
                 const Monomial& m, GPoly<C>& out) const {
    out.mono.clear();
    out.coef.clear();
    out.mono.reserve(x.size() - from_x + y.size() - from_y);
    out.coef.reserve(x.size() - from_x + y.size() - from_y);
    const Residue neg = c ? p_ - c : 0;
    std::size_t i = from_x, k = from_y;
    Monomial ym;
    bool have = false;
    while (i < x.size() || k < y.size()) {
      if (k < y.size() && !have) {
        ym = y.mono[k] * m;
        have = true;
      }
      int cmp = i >= x.size() ? -1 : k >= y.size() ? 1 : r_.compare(x.mono[i], ym);
      if (cmp > 0) {
        out.mono.push_back(x.mono[i]);
        out.coef.push_back(x.coef[i]);
        ++i;
      } else if (cmp < 0) {
        out.mono.push_back(ym);
        out.coef.push_back(mul_mod(neg, y.coef[k], p_));
        ++k;
        have = false;
      } else {
        Residue v = (x.coef[i] + mul_mod(neg, y.coef[k], p_)) % p_;
        if (v) {
          out.mono.push_back(ym);
          out.coef.push_back(v);
        }
        ++i;
        ++k;
        have = false;
      }
    }
  }

  // out = a*x - c*(m*y) over the tails x[from_x..], y[from_y..].
  void merge(const GPoly<Integer>& x, std::size_t from_x, const Integer& a, const GPoly<Integer>& y,
             std::size_t from_y, const Integer& c, const Monomial& m, GPoly<Integer>& out) const {
    out.mono.clear();
    out.coef.clear();
    out.mono.reserve(x.size() - from_x + y.size() - from_y);
    out.coef.reserve(x.size() - from_x + y.size() - from_y);
    const bool scale = a != 1;
    std::size_t i = from_x, k = from_y;
    Monomial ym;
    bool have = false;
    while (i < x.size() || k < y.size()) {
      if (k < y.size() && !have) {
        ym = y.mono[k] * m;
        have = true;
      }
      int cmp = i >= x.size() ? -1 : k >= y.size() ? 1 : r_.compare(x.mono[i], ym);
      if (cmp > 0) {
        out.mono.push_back(x.mono[i]);
        if (scale) out.coef.push_back(x.coef[i] * a);
        else out.coef.push_back(x.coef[i]);
        ++i;
      } else if (cmp < 0) {
        out.mono.push_back(ym);
        out.coef.emplace_back();
        mpz_mul(out.coef.back().get_mpz_t(), c.get_mpz_t(), y.coef[k].get_mpz_t());
        mpz_neg(out.coef.back().get_mpz_t(), out.coef.back().get_mpz_t());
        ++k;
        have = false;
      } else {
        Integer v;
        if (scale) mpz_mul(v.get_mpz_t(), x.coef[i].get_mpz_t(), a.get_mpz_t());
        else v = x.coef[i];
        mpz_submul(v.get_mpz_t(), c.get_mpz_t(), y.coef[k].get_mpz_t());
        if (v != 0) {
          out.mono.push_back(ym);
          out.coef.push_back(std::move(v));
        }
        ++i;
        ++k;
        have = false;
      }
    }
  }

  GPoly<C> spoly(const Pair& p) const {
    const GPoly<C>& f = basis_[std::size_t(p.i)];
    const GPoly<C>& g = basis_[std::size_t(p.j)];
    Monomial mf = p.lcm / f.lm(), mg = p.lcm / g.lm();
    // a*mf*f - c*mg*g; mf*f is formed explicitly since merge scales x by a.
    GPoly<C> shifted;
    shifted.mono.reserve(f.size());
    for (const auto& m : f.mono) shifted.mono.push_back(m * mf);
    shifted.coef = f.coef;
    GPoly<C> out;
    if constexpr (kModular) {
      merge_mod(shifted, 1, 1, g, 1, mg, out);
    } else {
      Integer d;
      mpz_gcd(d.get_mpz_t(), f.coef[0].get_mpz_t(), g.coef[0].get_mpz_t());
      Integer a = g.coef[0] / d, c = f.coef[0] / d;
      merge(shifted, 1, a, g, 1, c, mg, out);
    }
    out.sugar = p.sugar;
    return out;
  }

  int find_reducer(const Monomial& m) const {
    const std::uint32_t mask = m.support_mask();
    int best = -1;
    std::size_t best_len = SIZE_MAX;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const GPoly<C>& g = basis_[i];
      if ((g.mask & ~mask) != 0 || g.size() >= best_len) continue;
      if (!g.lm().divides(m)) continue;
      best = int(i);
      best_len = g.size();
    }
    return best;
  }

  // Geobucket of polynomials modulo p: bucket i holds at most 4^(i+2) terms,
  // the terms before head[i] are already consumed.
  struct Buckets {
    std::vector<GPoly<C>> b;
    std::vector<std::size_t> head;
  };

  static std::size_t bucket_cap(std::size_t i) { return std::size_t(16) << (2 * i); }

  // Adds -c*m*g[from..] to the buckets.
  void bucket_add(Buckets& bk, Residue c, const GPoly<C>& g, std::size_t from, const Monomial& m,
                  GPoly<C>& tmp) const {
    std::size_t len = g.size() - from, i = 0;
    while (bucket_cap(i) < len) ++i;
    if (bk.b.size() <= i) {
      bk.b.resize(i + 1);
      bk.head.resize(i + 1, 0);
    }
    merge_mod(bk.b[i], bk.head[i], c, g, from, m, tmp);
    std::swap(bk.b[i].mono, tmp.mono);
    std::swap(bk.b[i].coef, tmp.coef);
    bk.head[i] = 0;
    const Monomial one;
    while (bk.b[i].size() > bucket_cap(i)) {
      if (bk.b.size() <= i + 1) {
        bk.b.resize(i + 2);
        bk.head.resize(i + 2, 0);
      }
      merge_mod(bk.b[i + 1], bk.head[i + 1], p_ - 1, bk.b[i], 0, one, tmp);
      std::swap(bk.b[i + 1].mono, tmp.mono);
      std::swap(bk.b[i + 1].coef, tmp.coef);
      bk.head[i + 1] = 0;
      bk.b[i].mono.clear();
      bk.b[i].coef.clear();
      ++i;
    }
  }

  // Removes the leading term of the bucket sum; false once it is zero.
  bool bucket_lead(Buckets& bk, Monomial& mono, Residue& coef) const {
    for (;;) {
      int best = -1;
      for (std::size_t i = 0; i < bk.b.size(); ++i) {
        if (bk.head[i] >= bk.b[i].size()) continue;
        if (best < 0 || r_.compare(bk.b[i].mono[bk.head[i]], mono) > 0) {
          best = int(i);
          mono = bk.b[i].mono[bk.head[i]];
        }
      }
      if (best < 0) return false;
      coef = 0;
      for (std::size_t i = 0; i < bk.b.size(); ++i)
        if (bk.head[i] < bk.b[i].size() && bk.b[i].mono[bk.head[i]] == mono) {
          coef = (coef + bk.b[i].coef[bk.head[i]]) % p_;
          ++bk.head[i];
        }
      if (coef) return true;
    }
  }

  void reduce_mod(GPoly<C>& h, bool full) const {
    Buckets bk;
    GPoly<C> tmp, done;
    bk.b.push_back(std::move(h));
    bk.head.push_back(0);
    h = GPoly<C>{{}, {}, bk.b[0].sugar, 0};
    if (bk.b[0].size() > bucket_cap(0)) {
      // Move the input to the bucket that fits it.
      GPoly<C> in = std::move(bk.b[0]);
      bk.b[0] = GPoly<C>{};
      std::size_t i = 0;
      while (bucket_cap(i) < in.size()) ++i;
      bk.b.resize(i + 1);
      bk.head.resize(i + 1, 0);
      bk.b[i] = std::move(in);
    }
    Monomial lm;
    Residue c;
    while (bucket_lead(bk, lm, c)) {
      int j = find_reducer(lm);
      if (j < 0) {
        done.mono.push_back(lm);
        done.coef.push_back(c);
        if (!full) break;
        continue;
      }
      const GPoly<C>& g = basis_[std::size_t(j)];
      Monomial m = lm / g.lm();
      h.sugar = std::max(h.sugar, g.sugar + r_.weighted_degree(m));
      bucket_add(bk, c, g, 1, m, tmp);
    }
    // Whatever is left in the buckets is the unreduced tail.
    const Monomial one;
    for (std::size_t i = 0; i < bk.b.size(); ++i) {
      if (bk.head[i] >= bk.b[i].size()) continue;
      merge_mod(done, 0, p_ - 1, bk.b[i], bk.head[i], one, tmp);
      std::swap(done.mono, tmp.mono);
      std::swap(done.coef, tmp.coef);
    }
    h.mono = std::move(done.mono);
    h.coef = std::move(done.coef);
    normalize(h);
  }

  // Reduction of h modulo the current basis (fraction-free over Z); h ends
  // primitive, or monic modulo p.
  void reduce(GPoly<C>& h, bool full) const {
    if constexpr (kModular) {
      reduce_mod(h, full);
      return;
    }
    GPoly<C> done;
    GPoly<C> tmp;
    std::size_t start = 0, steps = 0;
    [[maybe_unused]] Integer a, c, d;
    while (start < h.size()) {
      const Monomial lm = h.mono[start];
      int j = find_reducer(lm);
      if (j < 0) {
        if (!full) break;
        done.mono.push_back(lm);
        done.coef.push_back(std::move(h.coef[start]));
        ++start;
        continue;
      }
      const GPoly<C>& g = basis_[std::size_t(j)];
      Monomial m = lm / g.lm();
      h.sugar = std::max(h.sugar, g.sugar + r_.weighted_degree(m));
      if constexpr (kModular) {
        merge_mod(h, start + 1, h.coef[start], g, 1, m, tmp);
      } else {
        mpz_gcd(d.get_mpz_t(), g.coef[0].get_mpz_t(), h.coef[start].get_mpz_t());
        mpz_divexact(a.get_mpz_t(), g.coef[0].get_mpz_t(), d.get_mpz_t());
        mpz_divexact(c.get_mpz_t(), h.coef[start].get_mpz_t(), d.get_mpz_t());
        if (a < 0) {
          a = -a;
          c = -c;
        }
        if (a != 1)
          for (auto& x : done.coef) x *= a;
        merge(h, start + 1, a, g, 1, c, m, tmp);
      }
      std::swap(h.mono, tmp.mono);
      std::swap(h.coef, tmp.coef);
      start = 0;
      if constexpr (!kModular)
        if (++steps % 24 == 0) remove_content(done, h);
    }
    if (!done.empty()) {
      done.mono.insert(done.mono.end(), h.mono.begin() + long(start), h.mono.end());
      done.coef.insert(done.coef.end(), std::make_move_iterator(h.coef.begin() + long(start)),
                       std::make_move_iterator(h.coef.end()));
      h.mono = std::move(done.mono);
      h.coef = std::move(done.coef);
    } else if (start > 0) {
      h.mono.erase(h.mono.begin(), h.mono.begin() + long(start));
      h.coef.erase(h.coef.begin(), h.coef.begin() + long(start));
    }
    normalize(h);
  }

  static void remove_content(GPoly<Integer>& a, GPoly<Integer>& b) {
    Integer g = 0;
    for (const auto* p : {&a, &b})
      for (const auto& x : p->coef) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
      }
    if (g == 0) return;
    for (auto* p : {&a, &b})
      for (auto& x : p->coef) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }

  // Gebauer-Moeller update for a new basis element.
  void insert(GPoly<C> h) {
    const Monomial hm = h.lm();
    const int k = int(basis_.size());
    for (auto it = queue_.begin(); it != queue_.end();) {
      const Pair& p = *it;
      if (p.i >= 0 && hm.divides(p.lcm) && basis_[std::size_t(p.i)].lm().lcm(hm) != p.lcm &&
          basis_[std::size_t(p.j)].lm().lcm(hm) != p.lcm)
        it = queue_.erase(it);
      else
        ++it;
    }
    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
      bool alive;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (redundant_[i]) continue;
      const Monomial& gm = basis_[i].lm();
      cands.push_back({int(i), gm.lcm(hm), gm.coprime(hm), true});
    }
    for (auto& x : cands)
      for (const auto& y : cands)
        if (&x != &y && y.lcm != x.lcm && y.lcm.divides(x.lcm)) {
          x.alive = false;
          break;
        }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!cands[a].alive) continue;
      bool any_coprime = cands[a].coprime;
      for (std::size_t b = a + 1; b < cands.size(); ++b)
        if (cands[b].alive && cands[b].lcm == cands[a].lcm) {
          any_coprime = any_coprime || cands[b].coprime;
          cands[b].alive = false;
        }
      if (any_coprime) cands[a].alive = false;
    }
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (!redundant_[i] && hm.divides(basis_[i].lm())) redundant_[i] = true;
    for (const auto& x : cands) {
      if (!x.alive) continue;
      const GPoly<C>& g = basis_[std::size_t(x.i)];
      unsigned s = std::max(g.sugar + r_.weighted_degree(x.lcm / g.lm()), h.sugar + r_.weighted_degree(x.lcm / hm));
      queue_.insert({x.i, k, x.lcm, s});
    }
    basis_.push_back(std::move(h));
    redundant_.push_back(false);
  }

  std::vector<Polynomial> interreduce() {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool drop = false;
      for (std::size_t j = 0; j < basis_.size() && !drop; ++j) {
        if (i == j) continue;
        if (basis_[j].lm().divides(basis_[i].lm()) && (basis_[j].lm() != basis_[i].lm() || j < i)) drop = true;
      }
      if (!drop) keep.push_back(i);
    }
    std::vector<GPoly<C>> minimal;
    for (auto i : keep) minimal.push_back(basis_[i]);
    std::sort(minimal.begin(), minimal.end(),
              [this](const GPoly<C>& x, const GPoly<C>& y) { return r_.compare(x.lm(), y.lm()) < 0; });
    std::vector<Polynomial> out;
    std::vector<GPoly<C>> all = std::move(basis_);
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      // Reduce the tail of element i by the other minimal elements.
      basis_.clear();
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) basis_.push_back(minimal[j]);
      GPoly<C> head;
      head.mono.push_back(minimal[i].lm());
      head.coef.push_back(minimal[i].coef[0]);
      GPoly<C> tail;
      tail.mono.assign(minimal[i].mono.begin() + 1, minimal[i].mono.end());
      tail.coef.assign(minimal[i].coef.begin() + 1, minimal[i].coef.end());
      reduce_scaled(head, tail);
      out.push_back(from_gpoly(ring_, head));
      minimal[i] = convert(out.back());
    }
    basis_ = std::move(all);
    return out;
  }

  // Reduces `tail` fully while keeping head*k + tail consistent; writes the
  // primitive result into head.
  void reduce_scaled(GPoly<C>& head, GPoly<C>& tail) const {
    GPoly<C> whole;
    whole.mono = head.mono;
    whole.coef = head.coef;
    whole.mono.insert(whole.mono.end(), tail.mono.begin(), tail.mono.end());
    whole.coef.insert(whole.coef.end(), tail.coef.begin(), tail.coef.end());
    // The leading monomial is irreducible by the other minimal elements, so a
    // full reduction only rewrites the tail.
    reduce(whole, true);
    head = std::move(whole);
  }

  RingPtr ring_;
  const Ring& r_;
  GroebnerOptions opt_;
  Residue p_;
  std::vector<GPoly<C>> inputs_;
  std::vector<GPoly<C>> basis_;
  std::vector<bool> redundant_;
  std::set<Pair, PairLess> queue_;
};

// Runs the integer or the modular engine.
std::vector<Polynomial> run_engine(const RingPtr& ring, const GroebnerOptions& options,
                                   const std::vector<Polynomial>& gens) {
  if (options.modulus) return Engine<Residue>(ring, options).run(gens);
  return Engine<Integer>(ring, options).run(gens);
}

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), elems_(std::move(elements)) {}

bool GroebnerBasis::is_unit() const { return elems_.size() == 1 && elems_[0].is_constant() && !elems_[0].is_zero(); }

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  Polynomial h = f.ring() && *f.ring() == *ring_ ? f : f.to_ring(ring_);
  std::vector<Polynomial::Term> rem;
  while (!h.is_zero()) {
    const auto& lt = h.leading_term();
    const Polynomial* red = nullptr;
    for (const auto& g : elems_)
      if (g.leading_monomial().divides(lt.mono)) {
        red = &g;
        break;
      }
    if (!red) {
      rem.push_back(lt);
      h -= Polynomial::monomial(ring_, lt.mono, lt.coeff);
      continue;
    }
    h -= red->mul_term(lt.mono / red->leading_monomial(), lt.coeff / red->leading_coeff());
  }
  return Polynomial::from_terms(ring_, std::move(rem));
}

bool GroebnerBasis::contains(const Ideal& i) const {
  for (const auto& g : i.generators())
    if (!contains(g)) return false;
  return true;
}

int GroebnerBasis::dimension() const {
  if (is_unit()) return -1;
  const std::size_t n = ring_->num_vars();
  std::vector<std::uint32_t> masks;
  for (const auto& g : elems_) masks.push_back(g.leading_monomial().support_mask());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (auto m : masks)
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& options) {
  RingPtr ring = ideal.ring()->order() == order ? ideal.ring() : ideal.ring()->with_order(order);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.to_ring(ring));
  return GroebnerBasis(ring, run_engine(ring, options, gens));
}

GroebnerBasis groebner_basis(const Ideal& ideal, const GroebnerOptions& options) {
  return groebner_basis(ideal, ideal.ring()->order(), options);
}

namespace {

std::vector<unsigned> weights_for(const std::vector<std::string>& names, const WeightMap& weights) {
  std::vector<unsigned> w;
  bool any = false;
  for (const auto& n : names) {
    auto it = weights.find(n);
    w.push_back(it == weights.end() ? 1 : it->second);
    any = any || it != weights.end();
  }
  if (!any) w.clear();
  return w;
}

RingPtr plain_ring(const RingPtr& ring) {
  return ring->order() == MonomialOrder::grevlex() ? ring : ring->with_order(MonomialOrder::grevlex());
}

}  // namespace

Ideal eliminate(const Ideal& i, const std::vector<std::string>& drop, const GroebnerOptions& options,
                const WeightMap& weights) {
  const RingPtr& src = i.ring();
  std::vector<std::string> order, keep;
  for (const auto& d : drop) {
    src->index_of(d);
    order.push_back(d);
  }
  for (const auto& v : src->variables())
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) keep.push_back(v);
  if (keep.empty()) throw Error(ErrorCode::InvalidArgument, "cannot eliminate every variable");
  order.insert(order.end(), keep.begin(), keep.end());
  RingPtr work = Ring::make(order, MonomialOrder::elimination(drop.size(), weights_for(order, weights)));
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators()) gens.push_back(g.to_ring(work));
  std::vector<Polynomial> gb = run_engine(work, options, gens);
  RingPtr target = Ring::make(keep);
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    bool free = true;
    for (std::size_t v = 0; v < drop.size(); ++v)
      if (g.involves(v)) {
        free = false;
        break;
      }
    if (free) out.push_back(g.to_ring(target).canonical());
  }
  return Ideal(target, std::move(out));
}

namespace {

bool is_homogeneous_ideal(const Ideal& i) {
  for (const auto& g : i.generators())
    if (!g.is_homogeneous()) return false;
  return true;
}

Ideal saturate_by_variable(const Ideal& i, std::size_t var, const GroebnerOptions& options) {
  const RingPtr& src = i.ring();
  std::vector<std::string> order;
  for (std::size_t v = 0; v < src->num_vars(); ++v)
    if (v != var) order.push_back(src->name(v));
  order.push_back(src->name(var));
  RingPtr work = Ring::make(order);
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators()) gens.push_back(g.to_ring(work));
  std::vector<Polynomial> gb = run_engine(work, options, gens);
  const std::size_t last = order.size() - 1;
  RingPtr target = plain_ring(src);
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    // Under grevlex with var smallest, var divides g iff it divides lm(g).
    unsigned e = 255;
    for (const auto& t : g.terms()) e = std::min(e, t.mono[last]);
    Polynomial q = g;
    if (e) q = exact_divide(g, Polynomial::monomial(work, Monomial::variable(last, e)));
    out.push_back(q.to_ring(target).canonical());
  }
  return Ideal(target, std::move(out));
}

std::string fresh_name(const Ring& r, const std::string& base) {
  std::string name = base;
  while (r.find(name)) name += "_";
  return name;
}

}  // namespace

Ideal saturate(const Ideal& i, const Polynomial& f, const GroebnerOptions& options, const WeightMap& weights) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "saturation by zero");
  const RingPtr& src = i.ring();
  Polynomial fl = *f.ring() == *src ? f : f.to_ring(src);
  if (fl.is_constant()) return Ideal(plain_ring(src), i.generators());
  if (fl.size() == 1 && weights.empty() && is_homogeneous_ideal(i)) {
    // A monomial: saturate by each variable in turn.
    Ideal cur = i;
    for (std::size_t v = 0; v < src->num_vars(); ++v)
      if (fl.leading_monomial()[v]) cur = saturate_by_variable(cur, v, options);
    return cur;
  }
  std::string t = fresh_name(*src, "t");
  std::vector<std::string> names{t};
  for (const auto& v : src->variables()) names.push_back(v);
  RingPtr big = Ring::make(names);
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators()) gens.push_back(g.to_ring(big));
  gens.push_back(Polynomial::variable(big, 0) * fl.to_ring(big) - Polynomial::constant(big, 1));
  WeightMap w = weights;
  if (!w.empty() && !w.count(t)) {
    // Keep t*f - 1 as balanced as possible: t carries no extra weight.
    w.emplace(t, 1);
  }
  Ideal result = eliminate(Ideal(big, std::move(gens)), {t}, options, w);
  return Ideal(plain_ring(src), result.generators());
}

Ideal intersect(const Ideal& i, const Ideal& j, const GroebnerOptions& options) {
  if (!i.ring()->same_variables(*j.ring())) throw Error(ErrorCode::RingMismatch, "intersection of ideals in different rings");
  const RingPtr& src = i.ring();
  if (i.is_zero() || j.is_zero()) return Ideal(plain_ring(src), {});
  std::string t = fresh_name(*src, "t");
  std::vector<std::string> names{t};
  for (const auto& v : src->variables()) names.push_back(v);
  RingPtr big = Ring::make(names);
  Polynomial tv = Polynomial::variable(big, 0);
  Polynomial one = Polynomial::constant(big, 1);
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators()) gens.push_back(tv * g.to_ring(big));
  for (const auto& g : j.generators()) gens.push_back((one - tv) * g.to_ring(big));
  Ideal result = eliminate(Ideal(big, std::move(gens)), {t}, options);
  return Ideal(plain_ring(src), result.generators());
}

bool same_ideal(const Ideal& a, const Ideal& b, const GroebnerOptions& options) {
  GroebnerBasis ga = groebner_basis(a, MonomialOrder::grevlex(), options);
  GroebnerBasis gb = groebner_basis(b, MonomialOrder::grevlex(), options);
  if (ga.size() != gb.size()) return false;
  for (std::size_t k = 0; k < ga.size(); ++k)
    if (ga.elements()[k] != gb.elements()[k].to_ring(ga.ring())) return false;
  return true;
}

Ideal saturate_by_ideal(const Ideal& i, const Ideal& j, const GroebnerOptions& options, SaturationMode mode,
                        unsigned seed) {
  if (j.is_zero()) throw Error(ErrorCode::InvalidArgument, "saturation by the zero ideal");
  if (j.size() == 1) return saturate(i, j.generators()[0], options);
  if (mode == SaturationMode::FastPath) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(1, 97);
    auto combo = [&]() {
      Polynomial f(i.ring());
      for (const auto& g : j.generators()) f += Rational(dist(rng)) * g.to_ring(i.ring());
      return f;
    };
    Polynomial f1 = combo(), f2 = combo();
    if (!f1.is_zero() && !f2.is_zero()) {
      Ideal s1 = saturate(i, f1, options), s2 = saturate(i, f2, options);
      if (same_ideal(s1, s2, options)) return s1;
    }
  }
  Ideal acc;
  bool first = true;
  for (const auto& g : j.generators()) {
    Ideal s = saturate(i, g, options);
    acc = first ? s : intersect(acc, s, options);
    first = false;
  }
  return acc;
}

Ideal minimal_generators(const Ideal& i, const GroebnerOptions& options) {
  for (const auto& g : i.generators())
    if (!g.is_weighted_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "minimal generators need a homogeneous ideal");
  GroebnerBasis full = groebner_basis(i, options);
  std::vector<Polynomial> cands = full.elements();
  const Ring& r = *i.ring();
  auto wdeg = [&r](const Polynomial& p) { return r.weighted_degree(p.leading_monomial()); };
  std::stable_sort(cands.begin(), cands.end(), [&](const Polynomial& a, const Polynomial& b) { return wdeg(a) < wdeg(b); });
  std::vector<Polynomial> kept;
  std::size_t pos = 0;
  while (pos < cands.size()) {
    unsigned d = wdeg(cands[pos]);
    std::size_t end = pos;
    while (end < cands.size() && wdeg(cands[end]) == d) ++end;
    if (kept.empty()) {
      // The reduced basis elements of the lowest degree are independent.
      for (std::size_t k = pos; k < end; ++k) kept.push_back(cands[k]);
    } else {
      GroebnerOptions trunc = options;
      trunc.max_degree = d;
      GroebnerBasis part = groebner_basis(Ideal(i.ring(), kept), trunc);
      for (std::size_t k = pos; k < end; ++k) {
        Polynomial nf = part.normal_form(cands[k]);
        if (nf.is_zero()) continue;
        kept.push_back(cands[k]);
        GroebnerOptions again = trunc;
        part = groebner_basis(Ideal(i.ring(), kept), again);
      }
    }
    pos = end;
  }
  std::vector<Polynomial> out;
  for (auto& k : kept) out.push_back(k.canonical());
  return Ideal(i.ring(), std::move(out));
}

QuotientAlgebra quotient_algebra(const GroebnerBasis& gb, std::size_t max_dimension) {
  const Ring& r = *gb.ring();
  const std::size_t n = r.num_vars();
  if (gb.is_unit()) {
    QuotientAlgebra qa;
    qa.gb_ = gb;
    return qa;
  }
  for (std::size_t v = 0; v < n; ++v) {
    bool pure = false;
    for (const auto& g : gb.elements()) {
      const Monomial& m = g.leading_monomial();
      if (m[v] > 0 && m.support_mask() == (1u << v)) pure = true;
    }
    if (!pure) throw Error(ErrorCode::NotZeroDimensional, "no pure power of " + r.name(v) + " among leading monomials");
  }
  auto standard = [&gb](const Monomial& m) {
    for (const auto& g : gb.elements())
      if (g.leading_monomial().divides(m)) return false;
    return true;
  };
  std::vector<Monomial> found{Monomial{}};
  std::vector<Monomial> frontier{Monomial{}};
  std::set<std::array<std::uint8_t, kMaxVars>> seen{Monomial{}.exp};
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier)
      for (std::size_t v = 0; v < n; ++v) {
        Monomial x = m * Monomial::variable(v);
        if (!seen.insert(x.exp).second) continue;
        if (!standard(x)) continue;
        next.push_back(x);
        found.push_back(x);
        if (found.size() > max_dimension) throw Error(ErrorCode::NotZeroDimensional, "quotient dimension above limit");
      }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(), [&r](const Monomial& a, const Monomial& b) { return r.compare(a, b) < 0; });
  QuotientAlgebra qa;
  qa.gb_ = gb;
  qa.monos_ = std::move(found);
  return qa;
}

RationalMatrix mult_matrix(const QuotientAlgebra& qa, std::string_view var) {
  const RingPtr& ring = qa.basis().ring();
  const std::size_t v = ring->index_of(var);
  const std::size_t n = qa.dimension();
  std::map<std::array<std::uint8_t, kMaxVars>, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index.emplace(qa.monomials()[k].exp, k);
  RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t col = 0; col < n; ++col) {
    Polynomial p = Polynomial::monomial(ring, qa.monomials()[col] * Monomial::variable(v));
    Polynomial nf = qa.basis().normal_form(p);
    for (const auto& t : nf.terms()) m[index.at(t.mono.exp)][col] = t.coeff;
  }
  return m;
}

}  // namespace chull
