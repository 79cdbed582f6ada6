#ifndef PAINLEVE_ALGEBRA_RATIONAL_FUNCTION_HPP
#define PAINLEVE_ALGEBRA_RATIONAL_FUNCTION_HPP

#include <map>
#include <optional>
#include <string>

#include "painleve/algebra/multipoly.hpp"

namespace painleve {

/// Quotient of two MultiPoly.  Always reduced by numeric content, common
/// monomial factors and a univariate gcd in the most shared variable; the
/// denominator's leading coefficient is normalized positive.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(MultiPoly::constant(Rational(1))) {}
    RationalFunction(const Rational& c) : RationalFunction(MultiPoly::constant(c)) {}
    RationalFunction(const MultiPoly& p) : num_(p), den_(MultiPoly::constant(Rational(1))) {}
    RationalFunction(MultiPoly num, MultiPoly den);

    static RationalFunction variable(Symbol s) { return RationalFunction(MultiPoly::variable(s)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// Numerator scaled by the constant denominator; throws if den is not constant.
    MultiPoly as_polynomial() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction derivative(Symbol s) const;
    RationalFunction substitute(const std::map<Symbol, RationalFunction>& bindings) const;
    std::optional<Rational> eval(const std::map<Symbol, Rational>& point) const;

    bool uses(Symbol s) const { return num_.uses(s) || den_.uses(s); }

    std::string to_string() const;

private:
    MultiPoly num_, den_;
    void reduce();
};

inline RationalFunction operator*(const Rational& c, const RationalFunction& f) {
    return RationalFunction(MultiPoly::constant(c)) * f;
}

}  // namespace painleve

#endif
