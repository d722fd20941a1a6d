#include "stacky/class_expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "stacky/errors.hpp"

namespace stacky {

namespace {

struct Lexer {
    explicit Lexer(const std::string& text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Int integer() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ParseError("expected a number at position " + std::to_string(start) +
                             " in class expression");
        return Int(text_.substr(start, pos_ - start));
    }

    std::size_t position() const { return pos_; }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

ChowClass parse_class(const std::string& text, int num_vars) {
    Lexer lex(text);
    ChowClass result(num_vars);
    if (lex.done()) throw ParseError("empty class expression");

    bool first = true;
    while (!lex.done()) {
        Rational sign(1);
        if (lex.accept('+')) {
            sign = 1;
        } else if (lex.accept('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " +
                             std::to_string(lex.position()) + " in class expression");
        }
        first = false;

        Rational coeff = sign;
        Exponents exps(static_cast<std::size_t>(num_vars), 0u);
        bool expect_factor = true;
        while (expect_factor) {
            if (lex.accept('x')) {
                const Int var = lex.integer();
                if (var < 0 || var >= num_vars)
                    throw ParseError("variable x" + var.str() + " out of range, fan has " +
                                     std::to_string(num_vars) + " rays");
                unsigned power = 1;
                if (lex.accept('^')) power = lex.integer().convert_to<unsigned>();
                exps[var.convert_to<std::size_t>()] += power;
            } else if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
                const Int num = lex.integer();
                if (lex.accept('/')) {
                    const Int den = lex.integer();
                    if (den == 0) throw ParseError("zero denominator in class expression");
                    coeff *= make_rational(num, den);
                } else {
                    coeff *= Rational(num);
                }
            } else {
                throw ParseError("expected a coefficient or variable at position " +
                                 std::to_string(lex.position()) + " in class expression");
            }
            expect_factor = lex.accept('*');
        }
        result.add_term(exps, coeff);
    }
    return result;
}

std::string format_monomial(const Exponents& exps) {
    std::ostringstream out;
    bool any = false;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (any) out << "*";
        out << "x" << i;
        if (exps[i] > 1) out << "^" << exps[i];
        any = true;
    }
    return any ? out.str() : std::string();
}

std::string format_class(const ChowClass& cls) {
    if (cls.is_zero()) return "0";

    std::vector<std::pair<Exponents, Rational>> terms(cls.terms().begin(), cls.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const int da = monomial_degree(a.first), db = monomial_degree(b.first);
        if (da != db) return da < db;
        return a.first < b.first;
    });

    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;

        const std::string mono = format_monomial(e);
        if (mono.empty()) {
            out << to_string(mag);
        } else if (mag == 1) {
            out << mono;
        } else {
            out << to_string(mag) << "*" << mono;
        }
    }
    return out.str();
}

} // namespace stacky
