#ifndef PAINLEVE_CURVES_WEIERSTRASS_HPP
#define PAINLEVE_CURVES_WEIERSTRASS_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <variant>

#include "painleve/algebra/rational_function.hpp"

namespace painleve {

struct DegenerateSextic : std::runtime_error {
    explicit DegenerateSextic(const std::string& what) : std::runtime_error(what) {}
};

/// y^2 = x^3 + a(h) x + b(h); coefficients polynomial in the fibration
/// variable and the spectator parameters.
struct WeierstrassG1 {
    MultiPoly a, b;
    Symbol fibration;
};

/// y^2 = a0(h) x^6 + ... + a6(h).
struct WeierstrassG2 {
    std::array<MultiPoly, 7> a;  // a[i] multiplies x^(6-i)
    Symbol fibration;
};

/// Chart at h = infinity.  The gluing is
///   hbar = 1/h,  x = xbar * h^(2e) (genus 1) or xbar * h^e (genus 2),
///   y = ybar * h^(3e),
/// where e = n minus the number of minimality divisions applied at hbar=0.
struct InfinityModel {
    std::variant<WeierstrassG1, WeierstrassG2> model;
    Symbol hbar;
    long n = 1;          // minimal chart exponent before hbar-minimization
    long exponent = 1;   // e: effective gluing exponent after minimization
    std::string gluing;  // display form of the substitution
};

/// Enforces the twist-minimality invariant: no nonconstant l(h) with
/// l^4 | a and l^6 | b survives.  Detects monomial factors in h and, for
/// purely rational coefficients, common rational roots.
WeierstrassG1 normalize_g1(MultiPoly a, MultiPoly b, Symbol fibration);

/// Same for a sextic: no l with l^i | a_i for all i.
WeierstrassG2 normalize_g2(std::array<MultiPoly, 7> a, Symbol fibration);

InfinityModel infinity_model_g1(const WeierstrassG1& w);
InfinityModel infinity_model_g2(const WeierstrassG2& w);

/// Exact round-trip check: substituting the gluing into the infinity model and
/// clearing h powers must reproduce the source equation.
bool infinity_model_round_trips(const WeierstrassG1& w, const InfinityModel& m);
bool infinity_model_round_trips(const WeierstrassG2& w, const InfinityModel& m);

}  // namespace painleve

#endif
