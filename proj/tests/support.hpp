#pragma once

#include "godeaux/poly.hpp"
#include "godeaux/quotient.hpp"

#include <random>
#include <vector>

namespace godeaux::testing {

inline RingPtr weighted_ring() { return make_ring({"x1", "x2", "y", "z"}, {1, 1, 2, 3}); }

inline const char* godeaux_sextic() { return "z^2 + y^3 - (x1 - x2)*y*z + x1^5*x2 + x1*x2^5"; }

/// Coefficients of prod 1/(1 - t^w) up to t^n, optionally times (1 - t^k).
inline std::vector<long> series(const std::vector<int>& weights, int n, int times_one_minus = 0) {
  std::vector<long> c(n + 1, 0);
  c[0] = 1;
  for (int w : weights)
    for (int d = w; d <= n; ++d) c[d] += c[d - w];
  if (times_one_minus > 0)
    for (int d = n; d >= times_one_minus; --d) c[d] -= c[d - times_one_minus];
  return c;
}

/// Random homogeneous polynomial of weighted degree d with small integer
/// coefficients; roughly half of the monomials are used.
inline Poly random_homogeneous(const RingPtr& ring, int d, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Term> terms;
  for (auto& m : monomial_basis(*ring, d)) {
    if (rng() % 2 == 0) continue;
    terms.push_back({m, Rational(coeff(rng))});
  }
  return Poly::from_terms(ring, std::move(terms));
}

}  // namespace godeaux::testing
