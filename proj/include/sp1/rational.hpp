#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace sp1 {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
// Throws ParseError on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical text: "p" for integers, "p/q" otherwise, always reduced.
std::string to_string(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Three-way comparison; gmpxx predates operator<=>.
inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  return cmp(a, b) <=> 0;
}

}  // namespace sp1
