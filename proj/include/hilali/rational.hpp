#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hilali {

/// Exact rational number in canonical form (reduced, positive denominator).
using Scalar = mpq_class;
using Integer = mpz_class;

std::string toString(const Scalar& value);
std::string toString(const Integer& value);

/// Parses "p" or "p/q"; throws InputError on malformed text or q == 0.
Scalar parseScalar(std::string_view text);

}  // namespace hilali
