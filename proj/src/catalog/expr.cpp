#include "painleve/catalog/expr.hpp"

#include <cctype>
#include <functional>
#include <vector>

namespace painleve {

namespace {

using RF = RationalFunction;

RF hiii_d6(const std::vector<RF>& a) {
    const RF &al = a[0], &be = a[1], &t = a[2], &q = a[3], &p = a[4];
    return (p * p * q * q - (q * q - be * q - t) * p - al * q) / t;
}

RF hiii_d7(const std::vector<RF>& a) {
    const RF &al = a[0], &t = a[1], &q = a[2], &p = a[3];
    return (p * p * q * q + al * q * p + t * p + q) / t;
}

RF hiii_d8(const std::vector<RF>& a) {
    const RF &t = a[0], &q = a[1], &p = a[2];
    return (p * p * q * q + q * p - q - t / q) / t;
}

struct ExprParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit ExprParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }

    RF parse() {
        RF e = sum();
        if (peek() != '\0') throw ParseError("trailing input", pos);
        return e;
    }

    RF sum() {
        RF e = (peek() == '-') ? (eat('-'), -product()) : product();
        while (true) {
            if (eat('+'))
                e = e + product();
            else if (eat('-'))
                e = e - product();
            else
                return e;
        }
    }

    RF product() {
        RF e = power();
        while (true) {
            if (eat('*'))
                e = e * power();
            else if (eat('/'))
                e = e / power();
            else
                return e;
        }
    }

    RF power() {
        RF base = atom();
        if (eat('^')) {
            bool neg = eat('-');
            long k = integer();
            RF r(Rational(1));
            for (long i = 0; i < k; ++i) r = r * base;
            return neg ? RF(Rational(1)) / r : r;
        }
        return base;
    }

    long integer() {
        skip_ws();
        if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected integer", pos);
        long v = 0;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return v;
    }

    RF atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            RF e = sum();
            expect(')');
            return e;
        }
        if (c == '-') {
            ++pos;
            return -atom();
        }
        if (isdigit(static_cast<unsigned char>(c))) return RF(Rational(integer()));
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            if (peek() == '(') {
                std::vector<RF> args;
                expect('(');
                if (peek() != ')') {
                    args.push_back(sum());
                    while (eat(',') || eat(';')) args.push_back(sum());
                }
                expect(')');
                if (name == "HIII_D6" && args.size() == 5) return hiii_d6(args);
                if (name == "HIII_D7" && args.size() == 4) return hiii_d7(args);
                if (name == "HIII_D8" && args.size() == 3) return hiii_d8(args);
                throw ParseError("unknown function " + name + "/" + std::to_string(args.size()),
                                 start);
            }
            return RF::variable(sym(name));
        }
        throw ParseError("unexpected character", pos);
    }
};

}  // namespace

RationalFunction parse_expression(const std::string& text) {
    ExprParser p(text);
    return p.parse();
}

}  // namespace painleve
