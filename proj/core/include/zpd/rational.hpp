#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zpd {

using Integer = mpz_class;
using Rational = mpq_class;

// "a/b", or "a" when the denominator is 1. Always canonical (lowest terms,
// positive denominator).
std::string to_string(const Rational &q);

// Accepts "a", "-a", "a/b". Throws InputError on anything else or on b = 0.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace zpd
