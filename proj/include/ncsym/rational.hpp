#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ncsym {

/// Exact rational coefficient with arbitrary-precision numerator and denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned n);

inline BigInt to_bigint(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

}  // namespace ncsym
