#ifndef IHARA_NUMBERS_HPP
#define IHARA_NUMBERS_HPP

#include <gmpxx.h>

#include <string>

namespace ihara {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const Integer& z) { return z.get_str(10); }

/// Parses a base-10 integer with optional leading '-'; throws ParseError.
Integer parse_integer(const std::string& text);

} // namespace ihara

#endif // IHARA_NUMBERS_HPP
