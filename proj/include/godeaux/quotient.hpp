#pragma once

#include "godeaux/linalg.hpp"
#include "godeaux/poly.hpp"

#include <unordered_map>
#include <vector>

namespace godeaux {

/// S/(f) for a single homogeneous modulus f. A principal ideal's generator is
/// its own Groebner basis, so division by f yields canonical normal forms.
class QuotientRing {
 public:
  QuotientRing(RingPtr ambient, Poly modulus);

  const RingPtr& ambient() const { return ambient_; }
  const Poly& modulus() const { return modulus_; }
  const Monomial& leading_monomial() const { return modulus_.leading_term().mono; }
  int modulus_degree() const { return *modulus_.degree(); }

  Poly normal_form(const Poly& p) const;
  /// normal_form(a * b) for normal forms a, b.
  Poly multiply(const Poly& a, const Poly& b) const { return normal_form(a * b); }

  /// Standard monomials of degree d (not divisible by the leading monomial),
  /// largest first. They form a basis of (S/f)_d.
  std::vector<Monomial> degree_basis(int d) const;
  std::size_t hilbert_dimension(int d) const { return degree_basis(d).size(); }

 private:
  RingPtr ambient_;
  Poly modulus_;
};

/// Coordinates of normal forms of one degree against degree_basis(d).
class GradedCoordinates {
 public:
  GradedCoordinates(const QuotientRing& q, int degree);

  int degree() const { return degree_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }

  /// p must be a normal form homogeneous of this degree.
  VectorQ coordinates(const Poly& p) const;
  SparseVectorQ sparse_coordinates(const Poly& p) const;
  Poly to_poly(std::span<const Rational> coords) const;
  Poly to_poly(const SparseVectorQ& coords) const;

 private:
  std::size_t index(const Monomial& m) const;

  RingPtr ring_;
  int degree_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

}  // namespace godeaux
