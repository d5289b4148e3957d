#ifndef MAJORKIT_RATIONAL_HPP
#define MAJORKIT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

#include "majorkit/errors.hpp"

namespace majorkit {

/// Exact rational scalar, the only number type used in decision paths.
/// Always canonical: positive denominator, gcd(|num|, den) = 1. Arbitrary
/// precision integers; no rounding anywhere.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "p/q" or "p" with optional leading sign. Rejects decimal notation
/// and zero denominators. The result is canonical regardless of input form
/// ("2/4" parses to 1/2).
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline Rational rat(long p, long q = 1) { return Rational(BigInt(p), BigInt(q)); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

} // namespace majorkit

#endif
