#include "leonard/expr.hpp"

#include <cctype>

namespace leonard {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    RationalFunction run() {
        RationalFunction v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    RationalFunction expr() {
        RationalFunction v = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }

    RationalFunction term() {
        RationalFunction v = unary();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                RationalFunction rhs = unary();
                if (rhs.is_zero()) throw DivisionByZeroError();
                v = v / rhs;
            } else {
                return v;
            }
        }
    }

    RationalFunction unary() {
        skip_ws();
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RationalFunction power() {
        RationalFunction base = atom();
        skip_ws();
        if (!accept('^')) return base;
        long e = exponent();
        if (e < 0 && base.is_zero()) throw DivisionByZeroError();
        return base.pow(e);
    }

    long exponent() {
        skip_ws();
        bool neg = false;
        bool parens = accept('(');
        skip_ws();
        if (accept('-'))
            neg = true;
        else
            accept('+');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("integer exponent expected");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos_;
        }
        if (parens) {
            skip_ws();
            if (!accept(')')) fail("')' expected after exponent");
        }
        return neg ? -v : v;
    }

    RationalFunction atom() {
        skip_ws();
        if (accept('(')) {
            RationalFunction v = expr();
            skip_ws();
            if (!accept(')')) fail("')' expected");
            return v;
        }
        if (pos_ < s_.size() && (s_[pos_] == 'q' || s_[pos_] == 'Q')) {
            ++pos_;
            return RationalFunction::q();
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RationalFunction(rational_from_string(s_.substr(start, pos_ - start)));
        }
        fail("number, 'q', or '(' expected");
        return {};
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw Error("scalar expression parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_scalar(const std::string& text) { return Parser(text).run(); }

}  // namespace leonard
