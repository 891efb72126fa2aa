#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace corner {

// Exact arbitrary-precision rational; every coefficient in this library is
// one of these.  No floating point enters any algebraic computation.
using Rational = mpq_class;

// Accepts "7", "-3/4" and decimal forms like "-1.25" (converted exactly).
std::optional<Rational> rational_from_string(const std::string& text);

std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

inline int sign_of(const Rational& value) { return sgn(value); }

}  // namespace corner
