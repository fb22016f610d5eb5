#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace cofrac {

// Exact rational arithmetic. All values are kept in lowest terms with a
// positive denominator; there is no rounding anywhere in the library.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Canonical constructor: ratio(3, 6) == 1/2. Throws std::invalid_argument on
// a zero denominator.
Rational ratio(const Integer& num, const Integer& den);
Rational ratio(long num, long den);

// Parses "p", "-p", "p/q" (ASCII decimal). The result is canonical.
Rational parse_rational(std::string_view text);

// Serializes as "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Bit length of the larger of |numerator|, denominator; instrumentation only.
std::size_t rational_bits(const Rational& value);

}  // namespace cofrac
