// Shared helpers for the unit suites.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "rescalc/polyring.hpp"

namespace rescalc::testing {

inline Polynomial P(const RingPtr& ring, const std::string& text) {
  return Polynomial::parse(text, ring);
}

inline std::vector<Polynomial> Ps(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(P(ring, t));
  return out;
}

inline PolyMatrix M(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& r : rows) out.push_back(Ps(ring, r));
  return PolyMatrix::from_rows(ring, out);
}

/// Random polynomial with at most `terms` terms, exponents <= max_exp and
/// integer coefficients in [-9, 9].
inline Polynomial random_poly(const RingPtr& ring, std::mt19937& rng, int terms = 4,
                              int max_exp = 2) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> expo(0, max_exp);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(ring->nvars());
    for (auto& x : e) x = expo(rng);
    out.push_back(Term{Monomial(e), Rational(coeff(rng))});
  }
  return Polynomial(ring, std::move(out));
}

}  // namespace rescalc::testing
