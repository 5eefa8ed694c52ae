#pragma once

#include "godeaux/rational.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace godeaux {

/// Polynomial ring over Q with positive integer variable weights.
///
/// Monomials are ordered by weighted degree first. Ties are broken reverse
/// lexicographically: variables are scanned from the lightest to the
/// heaviest (equal weights: last declared first), and at the first
/// differing exponent the monomial with the smaller exponent is the larger
/// one. With all weights equal this is ordinary grevlex in declaration
/// order; in P(1,1,2,3) it makes z^2 the leading monomial of a sextic.
class WeightedRing {
 public:
  WeightedRing(std::vector<std::string> names, std::vector<int> weights);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int weight(std::size_t i) const { return weights_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Variable indices in tie-break scan order.
  const std::vector<std::size_t>& scan_order() const { return scan_; }

  friend bool operator==(const WeightedRing& a, const WeightedRing& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
  std::vector<std::size_t> scan_;
};

using RingPtr = std::shared_ptr<const WeightedRing>;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial unit(std::size_t nvars, std::size_t var, std::uint32_t power = 1) {
    Monomial m(nvars);
    m.exps_.at(var) = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  bool is_one() const;
  bool divides(const Monomial& other) const;
  /// this / other; requires other.divides(*this).
  Monomial quotient(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Raw exponent-vector comparison; not the ring's monomial order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

int weighted_degree(const Monomial& m, const WeightedRing& ring);

/// The ring's monomial order (see WeightedRing).
std::strong_ordering monomial_order(const Monomial& a, const Monomial& b, const WeightedRing& ring);

/// All monomials of weighted degree d, largest first.
std::vector<Monomial> monomial_basis(const WeightedRing& ring, int d);

struct Term {
  Monomial mono;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial; terms are kept strictly decreasing in the ring's order
/// and never carry a zero coefficient.
class Poly {
 public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly variable(RingPtr ring, std::string_view name);
  static Poly monomial(RingPtr ring, Monomial m, const Rational& c = 1);
  /// Sorts, merges equal monomials and drops zeros.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Term& leading_term() const;

  /// True for the zero polynomial and for polynomials whose terms share one
  /// weighted degree.
  bool is_homogeneous() const;
  /// Weighted degree of the leading term; nullopt for zero.
  std::optional<int> degree() const;

  Rational coefficient(const Monomial& m) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly pow(unsigned e) const;
  /// Multiplies every coefficient by c.
  Poly scaled(const Rational& c) const;
  /// Multiplies by c * m.
  Poly times_term(const Monomial& m, const Rational& c) const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Poly scale(const Rational& c, const Poly& p);

struct DivisionResult {
  std::vector<Poly> quotients;
  Poly remainder;
};

/// Multivariate division: p = sum quotients[i] * divisors[i] + remainder and
/// no term of the remainder is divisible by a divisor's leading monomial.
DivisionResult divide(const Poly& p, const std::vector<Poly>& divisors);

/// Substitutes images[i] for variable i of p's ring. All images must share
/// one target ring.
Poly substitute(const Poly& p, const std::vector<Poly>& images, const RingPtr& target);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: identifiers [A-Za-z][A-Za-z0-9_]*, literals n or n/d, binary
/// + - *, unary -, ^ with a nonnegative integer exponent, parentheses.
/// Multiplication is always explicit.
Poly parse_poly(std::string_view text, const RingPtr& ring);

/// Canonical text, e.g. "x1^2*y - 3/2*z + 1"; parse_poly inverts it.
std::string format_poly(const Poly& p);

std::string format_monomial(const Monomial& m, const WeightedRing& ring);

}  // namespace godeaux
