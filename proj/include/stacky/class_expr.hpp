#ifndef STACKY_CLASS_EXPR_HPP
#define STACKY_CLASS_EXPR_HPP

#include <string>

#include "stacky/chow.hpp"

namespace stacky {

/// Class expressions: a signed sum of terms `coeff*xI^a*xJ^b...` where
/// `coeff` is a rational literal (`p/q` or an integer, optional when 1) and
/// `xK` is the generator of ray index K.  Whitespace is insignificant.
/// Examples: `x0^3`, `-4/7*x0*x3 - 3/7*x0*x4`, `1/2`.
ChowClass parse_class(const std::string& text, int num_vars);

/// Canonical text form: terms ordered by total degree, then by exponent
/// vector; parse_class(format_class(c)) == c.
std::string format_class(const ChowClass& cls);

std::string format_monomial(const Exponents& exps);

} // namespace stacky

#endif
