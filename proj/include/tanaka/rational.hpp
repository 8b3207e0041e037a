#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tanaka {

/// Exact rational number in lowest terms with positive denominator.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Parses "3/2", "-1", "+7", "0". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "3/2", "-1", "0".
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

} // namespace tanaka
