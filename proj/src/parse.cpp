#include "rf/parse.hpp"

#include "rf/error.hpp"

#include <cctype>
#include <sstream>

namespace rf {

namespace {

using P = MPoly<Cyclotomic>;

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& names) : s_(text), names_(names) {}

    P parse()
    {
        P p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw DomainError("parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    long integer()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 9) fail("integer literal too long for an exponent or conductor");
        return std::stol(s_.substr(start, pos_ - start));
    }

    P expr()
    {
        P acc = term();
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    P term()
    {
        P acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                P d = unary();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    fail("division is only allowed by a nonzero constant");
                }
                acc = d.terms().begin()->second.inverse() * acc;
            } else {
                return acc;
            }
        }
    }

    P unary()
    {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    P power()
    {
        P base = atom();
        if (accept('^')) {
            if (accept('(')) {
                const long e = integer();
                expect(')');
                return base.pow(static_cast<int>(e));
            }
            return base.pow(static_cast<int>(integer()));
        }
        return base;
    }

    P atom()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            P p = expr();
            expect(')');
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return P::constant(nvars(), Cyclotomic(Rational(Integer(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string id = s_.substr(start, pos_ - start);
            for (std::size_t k = 0; k < names_.size(); ++k)
                if (names_[k] == id) return P::var(nvars(), static_cast<int>(k));
            if (id == "zeta") {
                expect('(');
                const long n = integer();
                if (n < 1 || n > 100000) fail("zeta conductor out of range");
                expect(')');
                return P::constant(nvars(), Cyclotomic::zeta(static_cast<int>(n)));
            }
            if (id == "i") return P::constant(nvars(), Cyclotomic::i());
            pos_ = start;
            fail("unknown identifier '" + id + "'");
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    int nvars() const { return static_cast<int>(names_.size()); }

    const std::string& s_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

}  // namespace

MPoly<Cyclotomic> parse_expression(const std::string& text)
{
    static const std::vector<std::string> names{"u0", "u1"};
    return Parser(text, names).parse();
}

MPoly<Cyclotomic> parse_expression(const std::string& text, const std::vector<std::string>& names)
{
    return Parser(text, names).parse();
}

HomPoly parse_poly(const std::string& text)
{
    const P p = parse_expression(text);
    if (p.is_zero()) throw DomainError("polynomial is zero");
    const auto degrees = p.term_degrees();
    if (degrees.size() > 1) {
        std::ostringstream os;
        os << "non-homogeneous input: term degrees {";
        for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) os << (it == degrees.rbegin() ? "" : ", ") << *it;
        os << "}";
        throw DomainError(os.str());
    }
    std::map<int, Cyclotomic> terms;
    for (const auto& [e, c] : p.terms()) terms.emplace(e[0], c);
    return HomPoly(degrees.front(), std::move(terms));
}

Cyclotomic parse_scalar(const std::string& text)
{
    const P p = parse_expression(text);
    if (p.is_zero()) return Cyclotomic(0);
    if (!p.is_constant()) throw DomainError("expected a constant expression");
    return p.terms().begin()->second;
}

}  // namespace rf
