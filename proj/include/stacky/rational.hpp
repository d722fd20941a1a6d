#ifndef STACKY_RATIONAL_HPP
#define STACKY_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace stacky {

// Arbitrary-precision integer and rational scalars (GMP-backed, plain value
// semantics so they can be used as Eigen matrix scalars).  GMP keeps
// rationals in lowest terms with a positive denominator, which is exactly
// the canonical form used everywhere in this library.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

// num/den with explicit canonicalization; den must be nonzero.
Rational make_rational(const Int& num, const Int& den);

inline Rational make_rational(const Int& num) { return Rational(num); }

// "p/q" with q > 0 in lowest terms, or just "p" when q = 1.
std::string to_string(const Rational& r);
std::string to_string(const Int& n);

// Accepts an optionally signed integer literal or "p/q".  Normalizes, so
// "6/4" parses to 3/2.  Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

} // namespace stacky

#endif
