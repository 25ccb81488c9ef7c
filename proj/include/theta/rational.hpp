#ifndef THETA_RATIONAL_HPP
#define THETA_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace theta {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (lowest terms, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

// The two-argument mpq_class constructor does not reduce to lowest terms;
// use this whenever num/den may share a factor.
inline Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "p/q" or "p" (q > 0 after canonicalization). Rejects floats.
Rational parse_rational(const std::string& s);

// Renders in lowest terms, "p/q", or "p" when the denominator is 1.
std::string render_rational(const Rational& r);

// Nearest integer, ties rounded towards +infinity.
mpz_class round_nearest(const Rational& r);

// Integer part of sqrt for a nonnegative rational, as a double upper hint.
double to_double(const Rational& r);

}  // namespace theta

#endif
