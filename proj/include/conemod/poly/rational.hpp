#ifndef CONEMOD_POLY_RATIONAL_HPP
#define CONEMOD_POLY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace conemod {

/// Exact rational coefficients. mpq_class keeps values in lowest terms as long
/// as every value built from text goes through parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "int" or "int/posint". Throws std::invalid_argument on bad input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace conemod

#endif
