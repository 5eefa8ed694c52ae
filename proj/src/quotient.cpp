#include "godeaux/quotient.hpp"

#include <algorithm>

namespace godeaux {

QuotientRing::QuotientRing(RingPtr ambient, Poly modulus) : ambient_(std::move(ambient)), modulus_(std::move(modulus)) {
  if (modulus_.is_zero()) throw std::invalid_argument("modulus must be nonzero");
  if (!(*modulus_.ring() == *ambient_)) throw std::invalid_argument("modulus belongs to another ring");
  if (!modulus_.is_homogeneous()) throw std::invalid_argument("modulus must be homogeneous");
  if (*modulus_.degree() == 0) throw std::invalid_argument("modulus must have positive degree");
}

Poly QuotientRing::normal_form(const Poly& p) const { return divide(p, {modulus_}).remainder; }

std::vector<Monomial> QuotientRing::degree_basis(int d) const {
  std::vector<Monomial> all = monomial_basis(*ambient_, d);
  const Monomial& lm = leading_monomial();
  std::erase_if(all, [&lm](const Monomial& m) { return lm.divides(m); });
  return all;
}

GradedCoordinates::GradedCoordinates(const QuotientRing& q, int degree)
    : ring_(q.ambient()), degree_(degree), basis_(q.degree_basis(degree)) {
  index_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::size_t GradedCoordinates::index(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) {
    throw std::invalid_argument("monomial " + format_monomial(m, *ring_) + " is not standard in degree " +
                                std::to_string(degree_));
  }
  return it->second;
}

VectorQ GradedCoordinates::coordinates(const Poly& p) const {
  VectorQ v(basis_.size());
  for (const Term& t : p.terms()) v[index(t.mono)] = t.coeff;
  return v;
}

SparseVectorQ GradedCoordinates::sparse_coordinates(const Poly& p) const {
  SparseVectorQ v;
  v.reserve(p.term_count());
  for (const Term& t : p.terms()) v.emplace_back(index(t.mono), t.coeff);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Poly GradedCoordinates::to_poly(std::span<const Rational> coords) const {
  if (coords.size() != basis_.size()) throw std::invalid_argument("coordinate vector has the wrong length");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) terms.push_back({basis_[i], coords[i]});
  return Poly::from_terms(ring_, std::move(terms));
}

Poly GradedCoordinates::to_poly(const SparseVectorQ& coords) const {
  std::vector<Term> terms;
  for (const auto& [i, c] : coords) terms.push_back({basis_.at(i), c});
  return Poly::from_terms(ring_, std::move(terms));
}

}  // namespace godeaux
