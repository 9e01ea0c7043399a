#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace arrmono {

// Canonical (reduced, positive denominator) exact rationals and big integers.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

// Parses a comma separated list such as "2,3,1/6,1".
std::vector<Rational> parse_rational_list(std::string_view text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

} // namespace arrmono
