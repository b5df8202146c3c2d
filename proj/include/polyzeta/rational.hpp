#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace polyzeta {

using Rational = mpq_class;

// Accepts "p" or "p/q" with an optional leading sign; the result is canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational factorial(unsigned n);

inline Rational rational_from(std::uint64_t n) { return Rational(static_cast<unsigned long>(n)); }

}  // namespace polyzeta
