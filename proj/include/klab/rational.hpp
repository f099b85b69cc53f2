#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

namespace klab {

/// Exact rational number; always kept in canonical (reduced, positive denominator) form.
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "a/b" or "a" (optional leading '-'). Throws invalid_input on malformed text or b = 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// {"num": ..., "den": ..., "decimal": ...}. num/den are emitted as JSON integers when they
/// fit in 64 bits and as decimal strings otherwise.
nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

Rational factorial(unsigned n);
Rational power(const Rational& base, unsigned exponent);

}  // namespace klab
