#pragma once

#include "godeaux/poly.hpp"

#include <string>
#include <vector>

namespace godeaux {

/// Q(w) for w a root of an irreducible monic quadratic w^2 + p w + q.
class QuadraticField {
 public:
  struct Element {
    Rational a;  ///< constant part
    Rational b;  ///< coefficient of w
    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    friend bool operator==(const Element&, const Element&) = default;
  };

  /// `minpoly` is parsed in the single variable `var`; throws unless it is a
  /// monic quadratic without rational roots.
  QuadraticField(std::string var, std::string_view minpoly);

  const std::string& variable() const { return var_; }
  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }

  Element parse(std::string_view text) const;
  std::string format(const Element& x) const;

  Element add(const Element& x, const Element& y) const { return {x.a + y.a, x.b + y.b}; }
  Element mul(const Element& x, const Element& y) const;
  Element pow(const Element& x, unsigned e) const;

  /// Value of p at the given coordinates (one per ring variable).
  Element evaluate(const Poly& poly, const std::vector<Element>& point) const;

 private:
  std::string var_;
  RingPtr ring_;
  Rational p_;
  Rational q_;
};

}  // namespace godeaux
