#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chull/polynomial.hpp"

namespace chull::test {

inline Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(r, text); }

/// Sparse random polynomial with small integer coefficients.
inline Polynomial random_poly(const RingPtr& r, std::mt19937& rng, unsigned max_degree, std::size_t terms,
                              int coeff_range = 9) {
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::uniform_int_distribution<unsigned> exp(0, max_degree);
  std::vector<Polynomial::Term> out;
  for (std::size_t k = 0; k < terms; ++k) {
    Monomial m;
    unsigned budget = exp(rng);
    for (std::size_t v = 0; v < r->num_vars() && budget; ++v) {
      std::uniform_int_distribution<unsigned> part(0, budget);
      unsigned e = v + 1 == r->num_vars() ? budget : part(rng);
      m.exp[v] = static_cast<std::uint8_t>(e);
      budget -= e;
    }
    int c = coeff(rng);
    if (c) out.push_back({m, Rational(c)});
  }
  return Polynomial::from_terms(r, std::move(out));
}

/// Random nonzero polynomial (retries until nonzero and nonconstant).
inline Polynomial random_nonconstant(const RingPtr& r, std::mt19937& rng, unsigned max_degree, std::size_t terms) {
  for (;;) {
    Polynomial p = random_poly(r, rng, max_degree, terms);
    if (!p.is_constant()) return p;
  }
}

/// Contents of a file under tests/data, trailing whitespace removed.
inline std::string golden(const std::string& name) {
  std::ifstream in(std::string(CHULL_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

/// Random binary form of degree d with coefficients in [-range, range].
inline Polynomial random_binary_form(const RingPtr& r, std::mt19937& rng, unsigned d, int range = 5) {
  std::uniform_int_distribution<int> coeff(-range, range);
  std::vector<Polynomial::Term> out;
  for (unsigned i = 0; i <= d; ++i) {
    Monomial m;
    m.exp[0] = static_cast<std::uint8_t>(i);
    m.exp[1] = static_cast<std::uint8_t>(d - i);
    out.push_back({m, Rational(coeff(rng))});
  }
  return Polynomial::from_terms(r, std::move(out));
}

}  // namespace chull::test
