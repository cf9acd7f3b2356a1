#ifndef DIOPH_RATIONAL_HPP
#define DIOPH_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dioph {

/// Exact scalar of k = Q. Always kept canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p", "p/q" or a finite decimal such as "0.25" or "1e-3".
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& x);

/// Natural log of a positive rational, accurate for numerators and
/// denominators far outside the double range.
double log_of(const Rational& x);
double log_of(const Integer& x);

/// log max{1, x} for x >= 0.
double log_plus(const Rational& x);

/// x^e for e >= 0 (x^0 = 1); e < 0 requires x != 0.
Rational pow(const Rational& x, long e);

}  // namespace dioph

#endif
