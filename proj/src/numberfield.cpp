#include "godeaux/numberfield.hpp"

#include <stdexcept>

namespace godeaux {

namespace {

bool is_rational_square(const Rational& x) {
  if (sgn(x) < 0) return false;
  return mpz_perfect_square_p(x.get_num().get_mpz_t()) != 0 && mpz_perfect_square_p(x.get_den().get_mpz_t()) != 0;
}

}  // namespace

QuadraticField::QuadraticField(std::string var, std::string_view minpoly)
    : var_(std::move(var)), ring_(make_ring({var_}, {1})) {
  const Poly m = parse_poly(minpoly, ring_);
  if (m.is_zero() || *m.degree() != 2 || m.leading_term().coeff != 1) {
    throw std::invalid_argument("minimal polynomial must be a monic quadratic");
  }
  p_ = m.coefficient(Monomial(std::vector<std::uint32_t>{1}));
  q_ = m.coefficient(Monomial(std::vector<std::uint32_t>{0}));
  const Rational disc = p_ * p_ - 4 * q_;
  if (is_rational_square(disc)) throw std::invalid_argument("minimal polynomial has rational roots");
}

QuadraticField::Element QuadraticField::parse(std::string_view text) const {
  // Reduce modulo the minimal polynomial: w^2 = -p w - q.
  const Poly x = parse_poly(text, ring_);
  Element acc{0, 0};
  for (const Term& t : x.terms()) {
    Element wp = pow(Element{0, 1}, t.mono[0]);
    acc = add(acc, mul(Element{t.coeff, 0}, wp));
  }
  return acc;
}

std::string QuadraticField::format(const Element& x) const {
  std::vector<Term> terms;
  if (sgn(x.b) != 0) terms.push_back({Monomial(std::vector<std::uint32_t>{1}), x.b});
  if (sgn(x.a) != 0) terms.push_back({Monomial(std::vector<std::uint32_t>{0}), x.a});
  return format_poly(Poly::from_terms(ring_, std::move(terms)));
}

QuadraticField::Element QuadraticField::mul(const Element& x, const Element& y) const {
  const Rational bb = x.b * y.b;
  return {x.a * y.a - q_ * bb, x.a * y.b + x.b * y.a - p_ * bb};
}

QuadraticField::Element QuadraticField::pow(const Element& x, unsigned e) const {
  Element out{1, 0};
  for (unsigned i = 0; i < e; ++i) out = mul(out, x);
  return out;
}

QuadraticField::Element QuadraticField::evaluate(const Poly& poly, const std::vector<Element>& point) const {
  if (point.size() != poly.ring()->size()) throw std::invalid_argument("point has the wrong number of coordinates");
  Element acc{0, 0};
  for (const Term& t : poly.terms()) {
    Element v{t.coeff, 0};
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.mono[i] > 0) v = mul(v, pow(point[i], t.mono[i]));
    acc = add(acc, v);
  }
  return acc;
}

}  // namespace godeaux
