#include "godeaux/residue.hpp"

#include <stdexcept>

namespace godeaux {

BinaryForm BinaryForm::zero(int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  return {degree, VectorQ(static_cast<std::size_t>(degree) + 1)};
}

bool BinaryForm::is_zero() const {
  for (const Rational& c : coeffs)
    if (sgn(c) != 0) return false;
  return true;
}

BinaryForm operator+(const BinaryForm& x, const BinaryForm& y) {
  if (x.degree != y.degree) throw std::invalid_argument("adding binary forms of different degrees");
  BinaryForm out = x;
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] += y.coeffs[k];
  return out;
}

BinaryForm operator*(const BinaryForm& x, const BinaryForm& y) {
  BinaryForm out = BinaryForm::zero(x.degree + y.degree);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (sgn(x.coeffs[i]) == 0) continue;
    for (std::size_t j = 0; j < y.coeffs.size(); ++j) out.coeffs[i + j] += x.coeffs[i] * y.coeffs[j];
  }
  return out;
}

BinaryForm BinaryForm::scaled(const Rational& c) const {
  BinaryForm out = *this;
  for (Rational& x : out.coeffs) x *= c;
  return out;
}

BinaryForm parse_binary_form(std::string_view text, const std::string& a, const std::string& b, int degree_if_zero) {
  const RingPtr ring = make_ring({a, b}, {1, 1});
  const Poly p = parse_poly(text, ring);
  if (p.is_zero()) return BinaryForm::zero(degree_if_zero);
  if (!p.is_homogeneous()) throw std::invalid_argument("binary form '" + std::string(text) + "' is not homogeneous");
  BinaryForm f = BinaryForm::zero(*p.degree());
  for (const Term& t : p.terms()) f.coeffs[t.mono[1]] = t.coeff;
  return f;
}

std::string format_binary_form(const BinaryForm& f, const std::string& a, const std::string& b) {
  const RingPtr ring = make_ring({a, b}, {1, 1});
  std::vector<Term> terms;
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    if (sgn(f.coeffs[k]) == 0) continue;
    terms.push_back({Monomial({static_cast<std::uint32_t>(f.degree - static_cast<int>(k)), static_cast<std::uint32_t>(k)}),
                     f.coeffs[k]});
  }
  return format_poly(Poly::from_terms(ring, std::move(terms)));
}

// ---------------------------------------------------------------------------

VectorQ CurveElement::coordinates() const {
  VectorQ v = first.coeffs;
  v.insert(v.end(), second.coeffs.begin(), second.coeffs.end());
  return v;
}

CurveElement operator+(const CurveElement& x, const CurveElement& y) {
  if (x.degree != y.degree) throw std::invalid_argument("adding curve elements of different degrees");
  return {x.degree, x.first + y.first, x.second + y.second};
}

CurveElement operator*(const CurveElement& x, const CurveElement& y) {
  return {x.degree + y.degree, x.first * y.first, x.second * y.second};
}

CurveElement CurveElement::scaled(const Rational& c) const { return {degree, first.scaled(c), second.scaled(c)}; }

CurveElement CurveElement::pow(unsigned e) const {
  CurveElement out = one();
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

CurveElement parse_curve_element(const CurveElementText& text, int degree) {
  CurveElement e{degree, parse_binary_form(text.first, "a1", "b1", degree),
                 parse_binary_form(text.second, "a2", "b2", degree)};
  if (e.first.degree != degree || e.second.degree != degree) {
    throw std::invalid_argument("curve element (" + text.first + ", " + text.second + ") is not of degree " +
                                std::to_string(degree));
  }
  return e;
}

CurveElementText format_curve_element(const CurveElement& e) {
  return {format_binary_form(e.first, "a1", "b1"), format_binary_form(e.second, "a2", "b2")};
}

// ---------------------------------------------------------------------------

ResidueMap::ResidueMap(RingPtr ambient, std::vector<CurveElement> images)
    : ambient_(std::move(ambient)), images_(std::move(images)) {
  if (images_.size() != ambient_->size()) throw std::invalid_argument("residue map needs one image per variable");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].degree != ambient_->weight(i)) {
      throw std::invalid_argument("residue image of " + ambient_->name(i) + " has the wrong degree");
    }
  }
}

CurveElement ResidueMap::of_monomial(const Monomial& m) const {
  CurveElement out = CurveElement::one();
  for (std::size_t v = 0; v < m.size(); ++v)
    if (m[v] > 0) out = out * images_[v].pow(m[v]);
  return out;
}

CurveElement ResidueMap::operator()(const Poly& p, int degree_if_zero) const {
  if (p.is_zero()) return CurveElement::zero(degree_if_zero);
  if (!p.is_homogeneous()) throw std::invalid_argument("residue of a non-homogeneous polynomial");
  const int d = *p.degree();
  CurveElement out = CurveElement::zero(d);
  for (const Term& t : p.terms()) out = out + of_monomial(t.mono).scaled(t.coeff);
  return out;
}

// ---------------------------------------------------------------------------

TauSubring::TauSubring(CurveElement u, CurveElement v) : u_(std::move(u)), v_(std::move(v)) {
  if (u_.degree != 1 || v_.degree != 1) throw std::invalid_argument("subring generators must have degree 1");
}

std::vector<CurveElement> TauSubring::basis(int d) const {
  if (d < 0) throw std::invalid_argument("negative degree");
  std::vector<CurveElement> out;
  for (int i = 0; i <= d; ++i) out.push_back(u_.pow(static_cast<unsigned>(i)) * v_.pow(static_cast<unsigned>(d - i)));
  return out;
}

std::optional<VectorQ> TauSubring::coefficients(const CurveElement& e) const {
  const std::vector<CurveElement> b = basis(e.degree);
  std::vector<VectorQ> coords;
  coords.reserve(b.size());
  for (const CurveElement& x : b) coords.push_back(x.coordinates());
  return membership(e.coordinates(), coords);
}

}  // namespace godeaux
