#include "chull/lift.hpp"

#include <algorithm>

namespace chull {

ModularImage modular_image(const Ideal& ideal, const Integer& p) {
  std::vector<Polynomial> gens = ideal.generators();
  std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    const auto& r = *a.ring();
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (int c = r.compare(a.terms()[i].mono, b.terms()[i].mono)) return c > 0;
    return false;
  });
  ModularImage out;
  for (const auto& g : gens) {
    std::vector<Monomial> mono;
    std::vector<Integer> coef;
    for (const auto& t : g.terms()) {
      Integer num = t.coeff.get_num() % p, den = t.coeff.get_den() % p, inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      Integer c = num * inv;
      mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
      if (c == 0) continue;
      mono.push_back(t.mono);
      coef.push_back(std::move(c));
    }
    if (coef.empty()) continue;
    Integer lead;
    mpz_invert(lead.get_mpz_t(), coef.front().get_mpz_t(), p.get_mpz_t());
    for (auto& c : coef) {
      c *= lead;
      mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    }
    out.support.push_back(std::move(mono));
    out.coef.push_back(std::move(coef));
  }
  return out;
}

bool rational_reconstruct(const Integer& a, const Integer& m, Rational& out) {
  Integer bound = sqrt(Integer(m / 2));
  Integer r0 = m, r1 = a, s0 = 0, s1 = 1;
  mpz_fdiv_r(r1.get_mpz_t(), r1.get_mpz_t(), m.get_mpz_t());
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (s1 == 0 || abs(s1) > bound || gcd(r1, s1) != 1) return false;
  out = Rational(r1, s1);
  out.canonicalize();
  return true;
}

bool Lifter::add(const ModularImage& image, const Integer& p) {
  if (used_ > 0 && image.support != acc_.support) {
    if (++mismatched_ <= used_) return false;
    used_ = 0;
    lifted_.clear();
  }
  if (used_ > 0 && !lifted_.empty()) {
    bool agree = true;
    for (std::size_t g = 0; g < lifted_.size() && agree; ++g)
      for (std::size_t t = 0; t < lifted_[g].size() && agree; ++t) {
        const Rational& q = lifted_[g][t];
        Integer inv, den = q.get_den() % p;
        if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t())) {
          agree = false;
          break;
        }
        Integer v = q.get_num() * inv - image.coef[g][t];
        agree = mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t()) != 0;
      }
    if (agree) return true;
  }
  if (used_ == 0) {
    acc_ = image;
    modulus_ = p;
    mismatched_ = 0;
  } else {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), modulus_.get_mpz_t(), p.get_mpz_t());
    for (std::size_t g = 0; g < acc_.coef.size(); ++g)
      for (std::size_t t = 0; t < acc_.coef[g].size(); ++t) {
        // x = a + m ((b - a) m^-1 mod p)
        Integer& a = acc_.coef[g][t];
        Integer k = (image.coef[g][t] - a) * inv;
        mpz_fdiv_r(k.get_mpz_t(), k.get_mpz_t(), p.get_mpz_t());
        a += modulus_ * k;
      }
    modulus_ *= p;
  }
  ++used_;
  relift();
  return false;
}

void Lifter::relift() {
  lifted_.clear();
  for (const auto& coefs : acc_.coef) {
    std::vector<Rational> row;
    row.reserve(coefs.size());
    for (const auto& c : coefs) {
      Rational q;
      if (!rational_reconstruct(c, modulus_, q)) {
        lifted_.clear();
        return;
      }
      row.push_back(std::move(q));
    }
    lifted_.push_back(std::move(row));
  }
}

std::vector<Polynomial> Lifter::result(const RingPtr& ring) const {
  std::vector<Polynomial> out;
  for (std::size_t g = 0; g < lifted_.size(); ++g) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t t = 0; t < lifted_[g].size(); ++t) terms.push_back({acc_.support[g][t], lifted_[g][t]});
    out.push_back(Polynomial::from_terms(ring, std::move(terms)).canonical());
  }
  return out;
}

}  // namespace chull
