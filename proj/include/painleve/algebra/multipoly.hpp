#ifndef PAINLEVE_ALGEBRA_MULTIPOLY_HPP
#define PAINLEVE_ALGEBRA_MULTIPOLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "painleve/algebra/rational.hpp"
#include "painleve/algebra/symbols.hpp"

#include <json.hpp>

namespace painleve {

class RationalFunction;

struct DivisionByZeroPoly : std::runtime_error {
    DivisionByZeroPoly() : std::runtime_error("division by the zero polynomial") {}
};

/// Sparse exact multivariate polynomial over Q.
///
/// Terms are kept in graded-lexicographic order (leading term first), no
/// stored coefficient is zero, and every exponent vector has length equal to
/// the variable list.  Values are immutable in spirit: all operations return
/// new polynomials.
class MultiPoly {
public:
    struct Term {
        std::vector<std::uint32_t> exps;
        Rational coeff;
    };

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c);
    static MultiPoly constant(const Rational& c);
    static MultiPoly variable(Symbol s);
    static MultiPoly monomial(Symbol s, std::uint32_t power, const Rational& c = Rational(1));

    const std::vector<Symbol>& variables() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree() == 0); }
    Rational constant_value() const;

    /// Degree in one variable; -1 for the zero polynomial.
    long degree(Symbol s) const;
    /// Minimal exponent of s over all terms; 0 if s unused, -1 for zero poly.
    long ord(Symbol s) const;
    long total_degree() const;
    bool uses(Symbol s) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly pow(std::uint32_t k) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly derivative(Symbol s) const;

    /// Dense coefficient list in s: result[k] multiplies s^k and does not use s.
    std::vector<MultiPoly> coeffs_in(Symbol s) const;
    static MultiPoly from_coeffs(Symbol s, const std::vector<MultiPoly>& coeffs);
    MultiPoly coeff_of(Symbol s, std::uint32_t k) const;
    MultiPoly leading_coeff_in(Symbol s) const;

    /// Exact quotient, or nullopt when o does not divide this.
    std::optional<MultiPoly> divide_exact(const MultiPoly& o) const;
    MultiPoly divide_exact_or_throw(const MultiPoly& o) const;

    /// Divides by s^k (every term must carry at least s^k).
    MultiPoly divide_by_power(Symbol s, std::uint32_t k) const;

    /// Substitutes variables by rational functions; unbound variables stay.
    RationalFunction substitute(const std::map<Symbol, RationalFunction>& bindings) const;
    /// Polynomial-only substitution fast path.
    MultiPoly substitute_poly(const std::map<Symbol, MultiPoly>& bindings) const;

    /// Evaluates with every used variable bound to a rational.
    Rational eval(const std::map<Symbol, Rational>& point) const;

    /// Leading coefficient under the canonical (graded-lex) term order.
    const Rational& leading_rational() const;

    /// Scale making the polynomial integer-primitive; returns the factor f
    /// with (*this) = f * primitive.  Zero polynomial returns 1.
    Rational content() const;

    nlohmann::json to_json() const;
    static MultiPoly from_json(const nlohmann::json& j);
    std::string to_string() const;

private:
    std::vector<Symbol> vars_;
    std::vector<Term> terms_;

    void normalize();
    static MultiPoly with_universe(const std::vector<Symbol>& vars);
    friend MultiPoly align_mul(const MultiPoly& a, const MultiPoly& b);
    static void align(const MultiPoly& a, const MultiPoly& b, MultiPoly& a2, MultiPoly& b2);
    MultiPoly remap(const std::vector<Symbol>& universe) const;
    MultiPoly drop_unused() const;
    friend class RationalFunction;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

}  // namespace painleve

#endif
