#pragma once

#include <gmpxx.h>

#include <string>

namespace octa {

// Exact arithmetic carrier. GMP's mpq keeps exactly the contract we need:
// reduced form, positive denominator, canonical sign on the numerator.
using BigInt = mpz_class;
using Rational = mpq_class;

// Parses "p/q" or "p" with optional leading '-'. Rejects empty input,
// stray characters and zero denominators; `where` is prepended to error
// messages so file readers can report a location.
Rational parse_rational(const std::string& text, const std::string& where = "");

// Canonical form: "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

int sign(const Rational& value);

}  // namespace octa
