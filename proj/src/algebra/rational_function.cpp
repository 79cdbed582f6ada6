#include "painleve/algebra/rational_function.hpp"

#include <algorithm>

#include "painleve/algebra/resultant.hpp"

namespace painleve {

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroPoly();
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(Rational(1));
        return;
    }
    // common monomial factors
    for (Symbol v : den_.variables()) {
        if (!num_.uses(v) || !den_.uses(v)) continue;
        long m = std::min(num_.ord(v), den_.ord(v));
        if (m > 0) {
            num_ = num_.divide_by_power(v, static_cast<std::uint32_t>(m));
            den_ = den_.divide_by_power(v, static_cast<std::uint32_t>(m));
        }
    }
    // univariate gcd in the most shared variable
    if (!den_.is_constant()) {
        Symbol best = 0;
        long best_score = -1;
        for (Symbol v : den_.variables()) {
            if (num_.degree(v) <= 0 || den_.degree(v) <= 0) continue;
            long score = std::min(num_.degree(v), den_.degree(v));
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        if (best_score > 0) {
            MultiPoly g = gcd_univariate(num_, den_, best);
            if (g.degree(best) > 0) {
                auto qn = num_.divide_exact(g);
                auto qd = den_.divide_exact(g);
                if (qn && qd) {
                    num_ = *qn;
                    den_ = *qd;
                }
            }
        }
    }
    // integer-primitive denominator with positive leading coefficient
    Rational cd = den_.content();
    if (cd != 1) {
        Rational inv = Rational(1) / cd;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

MultiPoly RationalFunction::as_polynomial() const {
    if (!den_.is_constant()) throw std::logic_error("rational function is not polynomial");
    return num_ * (Rational(1) / den_.constant_value());
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return RationalFunction();
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZeroPoly();
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
}

RationalFunction RationalFunction::derivative(Symbol s) const {
    if (den_.is_constant())
        return RationalFunction(num_.derivative(s), den_);
    MultiPoly n = num_.derivative(s) * den_ - num_ * den_.derivative(s);
    return RationalFunction(std::move(n), den_ * den_);
}

RationalFunction RationalFunction::substitute(const std::map<Symbol, RationalFunction>& bindings) const {
    RationalFunction n = num_.substitute(bindings);
    RationalFunction d = den_.substitute(bindings);
    if (d.is_zero()) throw DivisionByZeroPoly();
    return n / d;
}

std::optional<Rational> RationalFunction::eval(const std::map<Symbol, Rational>& point) const {
    Rational d = den_.eval(point);
    if (d == 0) return std::nullopt;
    return num_.eval(point) / d;
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace painleve
