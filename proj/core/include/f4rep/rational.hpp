#ifndef F4REP_RATIONAL_HPP
#define F4REP_RATIONAL_HPP

#include <string>

#include <gmpxx.h>

namespace f4rep
{

using Integer = mpz_class;
using Rational = mpq_class;

/// Decimal form, "p" for integers and "p/q" otherwise.
std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

/// Parses "p" or "p/q"; the result is canonicalized.
Rational parse_rational(const std::string &text);

Integer binomial(unsigned long n, unsigned long k);

} // namespace f4rep

#endif
