#pragma once

#include "godeaux/linalg.hpp"
#include "godeaux/poly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace godeaux {

/// Homogeneous binary form; coeffs[k] multiplies a^(d-k) b^k.
struct BinaryForm {
  int degree = 0;
  VectorQ coeffs{Rational(0)};

  static BinaryForm zero(int degree);
  static BinaryForm one() { return {0, {Rational(1)}}; }

  bool is_zero() const;
  friend BinaryForm operator+(const BinaryForm& x, const BinaryForm& y);
  friend BinaryForm operator*(const BinaryForm& x, const BinaryForm& y);
  BinaryForm scaled(const Rational& c) const;
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

/// Reads a binary form from text in the two named variables; the text must
/// be homogeneous (the zero form takes `degree_if_zero`).
BinaryForm parse_binary_form(std::string_view text, const std::string& a, const std::string& b, int degree_if_zero);
std::string format_binary_form(const BinaryForm& f, const std::string& a, const std::string& b);

/// Element of Q[a1,b1] x Q[a2,b2] homogeneous of one degree.
struct CurveElement {
  int degree = 0;
  BinaryForm first;
  BinaryForm second;

  static CurveElement zero(int degree) { return {degree, BinaryForm::zero(degree), BinaryForm::zero(degree)}; }
  static CurveElement one() { return {0, BinaryForm::one(), BinaryForm::one()}; }

  bool is_zero() const { return first.is_zero() && second.is_zero(); }
  /// Concatenated coefficient vectors, length 2(d+1).
  VectorQ coordinates() const;

  friend CurveElement operator+(const CurveElement& x, const CurveElement& y);
  friend CurveElement operator*(const CurveElement& x, const CurveElement& y);
  CurveElement scaled(const Rational& c) const;
  CurveElement pow(unsigned e) const;
  friend bool operator==(const CurveElement&, const CurveElement&) = default;
};

/// Text pair for one curve element, e.g. {"-a1*b1", "-a2*b2"}.
using CurveElementText = std::pair<std::string, std::string>;

CurveElement parse_curve_element(const CurveElementText& text, int degree);
CurveElementText format_curve_element(const CurveElement& e);

/// Graded ring homomorphism from the ambient ring into the curve ring, given
/// by the image of each variable (image degree = variable weight).
class ResidueMap {
 public:
  ResidueMap(RingPtr ambient, std::vector<CurveElement> images);

  const RingPtr& ambient() const { return ambient_; }
  const std::vector<CurveElement>& images() const { return images_; }

  /// Throws std::invalid_argument for non-homogeneous input. The zero
  /// polynomial maps to the zero element of degree `degree_if_zero`.
  CurveElement operator()(const Poly& p, int degree_if_zero = 0) const;
  CurveElement of_monomial(const Monomial& m) const;

 private:
  RingPtr ambient_;
  std::vector<CurveElement> images_;
};

/// The subring Q[u, v] of the curve ring for two degree-one elements.
class TauSubring {
 public:
  TauSubring(CurveElement u, CurveElement v);

  const CurveElement& u() const { return u_; }
  const CurveElement& v() const { return v_; }

  /// u^i v^(d-i) for i = 0..d.
  std::vector<CurveElement> basis(int d) const;
  /// Coefficients of e against basis(e.degree), when e lies in the subring.
  std::optional<VectorQ> coefficients(const CurveElement& e) const;
  bool contains(const CurveElement& e) const { return coefficients(e).has_value(); }

 private:
  CurveElement u_;
  CurveElement v_;
};

}  // namespace godeaux
