#include "ppj/exact/parse.hpp"

#include "ppj/derive/jets.hpp"

#include <cctype>
#include <string>

namespace ppj {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RationalFunction parse()
    {
        RationalFunction e = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("parse error at column " + std::to_string(pos_ + 1) + " in '" +
                         std::string(text_) + "': " + what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char ch)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr()
    {
        RationalFunction acc = term();
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    RationalFunction term()
    {
        RationalFunction acc = unary();
        while (true) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                RationalFunction d = unary();
                if (d.is_zero()) fail("division by zero");
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RationalFunction unary()
    {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RationalFunction power()
    {
        RationalFunction base = primary();
        if (accept('^')) {
            bool negative = accept('-');
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
            if (negative && base.is_zero()) fail("division by zero");
            return base.pow(negative ? -k : k);
        }
        return base;
    }

    RationalFunction primary()
    {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            RationalFunction e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') return symbol();
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    RationalFunction number()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        std::string frac;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            std::size_t fs = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            frac = std::string(text_.substr(fs, pos_ - fs));
        }
        if (digits.empty() && frac.empty()) fail("malformed number");
        Rational value(digits.empty() ? std::string("0") : digits);
        if (!frac.empty()) {
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
            value += Rational(mpz_class(frac), scale);
        }
        value.canonicalize();
        return RationalFunction(value);
    }

    RationalFunction symbol()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        std::string name(text_.substr(start, pos_ - start));
        if (name.starts_with("D_")) {
            auto dir = parse_direction(std::string_view(name).substr(2));
            if (!dir) fail("unknown direction in '" + name + "'");
            if (!accept('(')) fail("expected '(' after " + name);
            RationalFunction inner = expr();
            if (!accept(')')) fail("expected ')'");
            return differentiate(inner, *dir);
        }
        auto sym = Symbol::lookup(name);
        if (!sym) {
            pos_ = start;
            fail("unknown symbol '" + name + "'");
        }
        return RationalFunction(*sym);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace ppj
