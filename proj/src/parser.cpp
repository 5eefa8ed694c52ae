#include "godeaux/poly.hpp"

#include <cctype>
#include <limits>

namespace godeaux {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

// Recursive descent:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := number | identifier | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) fail("exponent must be a nonnegative integer");
      if (digits.size() > 6) {
        pos_ = start;
        fail("exponent too large");
      }
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(read_digits(), 10);
      Rational value(num);
      // n/d is a single literal only when the slash is directly followed by digits.
      if (pos_ < text_.size() && text_[pos_] == '/') {
        const std::size_t slash = pos_;
        ++pos_;
        std::string den = read_digits();
        if (den.empty()) {
          pos_ = slash;
          fail("expected denominator after '/'");
        }
        Integer d(den, 10);
        if (sgn(d) == 0) {
          pos_ = slash;
          fail("zero denominator");
        }
        value = Rational(num, d);
        value.canonicalize();
      }
      return Poly::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Poly::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

std::string format_monomial(const Monomial& m, const WeightedRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    const Rational mag = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = t.mono.is_one();
    if (unit) {
      out += format_rational(mag);
    } else {
      if (mag != 1) out += format_rational(mag) + "*";
      out += format_monomial(t.mono, *p.ring());
    }
  }
  return out;
}

}  // namespace godeaux
