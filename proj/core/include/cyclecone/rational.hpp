#pragma once

// Exact scalars. Every quantity in the library is an ExactRational or a BigInt;
// nothing is ever rounded.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cyclecone {

using BigInt = mpz_class;
using ExactRational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error if den == 0.
ExactRational make_rational(const BigInt& num, const BigInt& den);

/// Serializes as "p/q" with q > 0. Integers keep the "/1" suffix so the
/// format has a single shape.
std::string to_string(const ExactRational& value);
std::string to_string(const BigInt& value);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed text or a
/// zero denominator. The result is canonicalized.
ExactRational parse_rational(std::string_view text);

/// Display-only conversion.
double to_double(const ExactRational& value);

ExactRational abs_value(const ExactRational& value);

}  // namespace cyclecone
