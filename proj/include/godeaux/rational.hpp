#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace godeaux {

// mpq_class keeps numerator/denominator coprime with a positive denominator
// as long as every value passes through canonicalize(); the helpers below
// and the gmpxx operators guarantee that.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n" or "n/d" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text form: "n" when the denominator is 1, otherwise "n/d".
std::string format_rational(const Rational& q);

std::string format_integer(const Integer& z);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

}  // namespace godeaux
