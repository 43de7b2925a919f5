#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gramcalc/polynomial.hpp"

namespace gramcalc {

// Parse failure with the byte offset of the offending token in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

namespace expr_detail {

struct Token {
    enum class Kind { identifier, integer, plus, minus, star, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    std::size_t offset;
};

[[noreturn]] inline void fail(std::size_t offset, const std::string& what) {
    throw ParseError("syntax error at offset " + std::to_string(offset) + ": " + what, offset);
}

inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            out.push_back({Token::Kind::identifier, std::string(text.substr(start, i - start)), start});
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Token::Kind::integer, std::string(text.substr(start, i - start)), start});
        } else {
            Token::Kind kind;
            switch (c) {
                case '+': kind = Token::Kind::plus; break;
                case '-': kind = Token::Kind::minus; break;
                case '*': kind = Token::Kind::star; break;
                case '^': kind = Token::Kind::caret; break;
                case '(': kind = Token::Kind::lparen; break;
                case ')': kind = Token::Kind::rparen; break;
                default: fail(start, std::string("unexpected character '") + c + "'");
            }
            out.push_back({kind, std::string(1, c), start});
            ++i;
        }
    }
    out.push_back({Token::Kind::end, "", text.size()});
    return out;
}

// Grammar, with conventional precedence (^ binds tightest, then *, then +/-):
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' exponent]
//   atom   := identifier | integer | '(' expr ')'
//   exponent := ['+'|'-'] integer | '(' ['+'|'-'] integer ')'
// There is no implicit multiplication: "2uw" lexes as the single identifier
// "uw" after "2" and is rejected.
class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>* universe)
        : tokens_(tokenize(text)), universe_(universe) {}

    Polynomial run() {
        Polynomial p = parse_expr();
        if (peek().kind != Token::Kind::end)
            fail(peek().offset, "unexpected '" + peek().text + "'");
        if (universe_) return p.with_variable_order(*universe_);
        return p.with_variable_order(seen_);
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    Polynomial parse_expr() {
        bool negate = accept(Token::Kind::minus);
        Polynomial p = parse_term();
        if (negate) p = -p;
        for (;;) {
            if (accept(Token::Kind::plus)) {
                p += parse_term();
            } else if (accept(Token::Kind::minus)) {
                p -= parse_term();
            } else {
                return p;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (accept(Token::Kind::star)) p *= parse_factor();
        return p;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        if (peek().kind != Token::Kind::caret) return base;
        std::size_t caret_offset = advance().offset;
        int e = parse_exponent();
        try {
            return base.pow(e);
        } catch (const std::domain_error& err) {
            fail(caret_offset, err.what());
        }
    }

    int parse_exponent() {
        bool parenthesized = accept(Token::Kind::lparen);
        int sign = 1;
        if (accept(Token::Kind::minus))
            sign = -1;
        else
            accept(Token::Kind::plus);
        const Token& tok = peek();
        if (tok.kind != Token::Kind::integer) fail(tok.offset, "expected an integer exponent");
        advance();
        long long value = 0;
        for (char c : tok.text) {
            value = value * 10 + (c - '0');
            if (value > 1'000'000) fail(tok.offset, "exponent out of range");
        }
        if (parenthesized && !accept(Token::Kind::rparen))
            fail(peek().offset, "expected ')'");
        return static_cast<int>(sign * value);
    }

    Polynomial parse_atom() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Token::Kind::identifier: {
                advance();
                if (universe_ &&
                    std::find(universe_->begin(), universe_->end(), tok.text) == universe_->end())
                    throw ParseError("unknown identifier '" + tok.text + "' at offset " +
                                         std::to_string(tok.offset),
                                     tok.offset);
                if (std::find(seen_.begin(), seen_.end(), tok.text) == seen_.end())
                    seen_.push_back(tok.text);
                return Polynomial::variable(tok.text);
            }
            case Token::Kind::integer:
                advance();
                return Polynomial::constant(BigInt(tok.text));
            case Token::Kind::lparen: {
                advance();
                Polynomial p = parse_expr();
                if (!accept(Token::Kind::rparen)) fail(peek().offset, "expected ')'");
                return p;
            }
            default:
                fail(tok.offset, "expected an operand");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const std::vector<std::string>* universe_;
    std::vector<std::string> seen_;  // identifiers in first-appearance order
};

}  // namespace expr_detail

namespace expr {

// Parses an integer Laurent polynomial.  The result's declared variable order
// is the order of first appearance in the text.
inline Polynomial parse(std::string_view text) {
    return expr_detail::Parser(text, nullptr).run();
}

// As above, but identifiers outside `universe` are rejected and the result's
// declared variable order is `universe` itself.
inline Polynomial parse(std::string_view text, const std::vector<std::string>& universe) {
    return expr_detail::Parser(text, &universe).run();
}

// Canonical text form: terms in descending lexicographic order of exponent
// vectors read along the print variable order; within a term, variables in
// that same order; unit coefficients and unit exponents elided; binary
// '+'/'-' spaced, a leading negative sign attached.  parse(print(p)) == p.
inline std::string print(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const std::vector<std::string> order = p.print_variable_order();
    std::vector<const std::pair<const Monomial, BigInt>*> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [&order](const auto* a, const auto* b) {
        return lex_exponent_compare(a->first, b->first, order) > 0;
    });
    std::string out;
    bool first = true;
    for (const auto* t : terms) {
        const auto& [m, c] = *t;
        const bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const BigInt magnitude = boost::multiprecision::abs(c);
        std::string factors;
        for (const auto& v : order) {
            int e = m.exponent(v);
            if (e == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += v;
            if (e != 1) {
                factors += "^";
                factors += std::to_string(e);
            }
        }
        if (factors.empty()) {
            out += magnitude.str();
        } else {
            if (magnitude != 1) {
                out += magnitude.str();
                out += "*";
            }
            out += factors;
        }
    }
    return out;
}

}  // namespace expr

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << expr::print(p);
}

}  // namespace gramcalc
