#ifndef GDALG_RATIONAL_HPP
#define GDALG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gdalg {

// Exact coefficients. GMP keeps mpq_class in lowest terms with a positive
// denominator after every arithmetic operation.
using Rational = mpq_class;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed text
// or a zero denominator.
Rational parse_rational(std::string_view text);

} // namespace gdalg

#endif
