#include "cofrac/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cofrac {

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  mpq_canonicalize(r.backend().data());
  return r;
}

Rational ratio(long num, long den) { return ratio(Integer(num), Integer(den)); }

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      if (!is_int(text)) throw std::invalid_argument("");
      return Rational(Integer(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw std::invalid_argument("");
    return ratio(Integer(std::string(num)), Integer(std::string(den)));
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) +
                                "'");
  }
}

std::string to_string(const Rational& value) {
  // mpq prints "p/q", or "p" when q == 1; values are canonical by contract.
  return value.str();
}

std::size_t rational_bits(const Rational& value) {
  Integer n = numerator(value);
  if (n < 0) n = -n;
  Integer d = denominator(value);
  std::size_t nb = n == 0 ? 1 : mpz_sizeinbase(n.backend().data(), 2);
  std::size_t db = mpz_sizeinbase(d.backend().data(), 2);
  return std::max(nb, db);
}

}  // namespace cofrac
