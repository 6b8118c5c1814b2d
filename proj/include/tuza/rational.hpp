#pragma once

#include <gmpxx.h>

#include <string>

namespace tuza {

// GMP rationals are kept canonical (reduced, positive denominator) by gmpxx
// after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Accepts "p", "p/q", or a finite decimal such as "0.25".
Rational parse_rational(const std::string& text);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

}  // namespace tuza
