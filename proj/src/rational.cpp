#include "stacky/rational.hpp"

#include <cctype>

#include "stacky/errors.hpp"

namespace stacky {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    Rational r(num);
    r /= Rational(den);
    return r;
}

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const Int& n) { return n.str(); }

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(text))
            throw ParseError("malformed rational literal: '" + std::string(text) + "'");
        return Rational(Int(std::string(text)));
    }
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw ParseError("malformed rational literal: '" + std::string(text) + "'");
    return make_rational(Int(std::string(num)), Int(std::string(den)));
}

} // namespace stacky
