#ifndef METALLIC_LITERAL_HPP
#define METALLIC_LITERAL_HPP

// Literal grammar shared by spec files and reports:
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' integer)?
//   atom  := integer | 'sqrt' '(' expr ')' | identifier | '(' expr ')'
//
// Identifiers are parameter names, then the bound constants (sigma, p, q).
// Division and sqrt only accept constant operands.

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "symbolic.hpp"

namespace metallic {

struct LiteralContext {
    std::map<std::string, FieldElement> constants;

    static LiteralContext metallic(const MetallicParams &mp)
    {
        LiteralContext ctx;
        ctx.constants["sigma"] = mp.sigma;
        ctx.constants["p"] = FieldElement(mp.p);
        ctx.constants["q"] = FieldElement(mp.q);
        return ctx;
    }
};

namespace detail {

class LiteralParser {
public:
    LiteralParser(const std::string &text, Poly::Vars vars, const LiteralContext &ctx, int line, int column)
        : s_(text), vars_(std::move(vars)), ctx_(ctx), line_(line), col0_(column)
    {
    }

    Poly parse()
    {
        Poly out = expr();
        skip();
        if (pos_ != s_.size()) {
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        }
        return out;
    }

private:
    const std::string &s_;
    Poly::Vars vars_;
    const LiteralContext &ctx_;
    int line_;
    int col0_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string &what) const
    {
        throw parse_error(what, line_, col0_ + static_cast<int>(pos_));
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
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
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    static std::optional<FieldElement> as_constant(const Poly &p)
    {
        if (p.is_zero()) {
            return FieldElement();
        }
        if (p.terms().size() == 1 && p.degree() == 0) {
            return p.terms().begin()->second;
        }
        return std::nullopt;
    }

    Poly expr()
    {
        Poly acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term()
    {
        Poly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Poly d = unary();
                auto c = as_constant(d);
                if (!c) {
                    pos_ = at;
                    fail("division by a non-constant expression");
                }
                if (c->is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc *= c->inverse();
            } else {
                return acc;
            }
        }
    }

    Poly unary()
    {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    Poly power()
    {
        Poly base = atom();
        if (accept('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected an integer exponent");
            }
            const int e = std::stoi(s_.substr(start, pos_ - start));
            Poly out = Poly::constant(vars_, FieldElement(1));
            for (int i = 0; i < e; ++i) {
                out = out * base;
            }
            return out;
        }
        return base;
    }

    Poly atom()
    {
        skip();
        if (pos_ >= s_.size()) {
            fail("unexpected end of expression");
        }
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
            }
            Rational r(mpz_class(s_.substr(start, pos_ - start)));
            return Poly::constant(vars_, FieldElement(r));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name = s_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < vars_->size(); ++i) {
                if ((*vars_)[i] == name) {
                    return Poly::variable(vars_, i);
                }
            }
            if (name == "sqrt") {
                expect('(');
                const std::size_t at = pos_;
                Poly arg = expr();
                expect(')');
                auto v = as_constant(arg);
                if (!v || !v->is_rational()) {
                    pos_ = at;
                    fail("sqrt needs a constant rational argument");
                }
                if (v->rational_part() < 0) {
                    pos_ = at;
                    fail("sqrt of a negative number");
                }
                return Poly::constant(vars_, FieldElement::sqrt(v->rational_part()));
            }
            auto it = ctx_.constants.find(name);
            if (it != ctx_.constants.end()) {
                return Poly::constant(vars_, it->second);
            }
            pos_ = start;
            fail("unknown identifier '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

} // namespace detail

inline Poly parse_poly(const std::string &text, const Poly::Vars &vars, const LiteralContext &ctx = {}, int line = 0,
                       int column = 1)
{
    return detail::LiteralParser(text, vars, ctx, line, column).parse();
}

inline FieldElement parse_number(const std::string &text, const LiteralContext &ctx = {}, int line = 0, int column = 1)
{
    const auto vars = Poly::make_vars({});
    Poly p = parse_poly(text, vars, ctx, line, column);
    if (p.is_zero()) {
        return {};
    }
    return p.terms().begin()->second;
}

} // namespace metallic

#endif
