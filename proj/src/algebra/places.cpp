#include "painleve/algebra/places.hpp"

namespace painleve {

namespace {

// Certifies that a spectator-coefficient polynomial is nonzero at a generic
// point.  Constants certify trivially; otherwise draw witness assignments.
void certify_nonzero(const MultiPoly& coeff, const WitnessConfig& cfg) {
    if (coeff.is_zero()) throw std::logic_error("certify_nonzero on zero polynomial");
    if (coeff.is_constant()) return;
    WitnessRng rng(cfg.seed);
    for (int attempt = 0; attempt <= cfg.retries; ++attempt) {
        std::map<Symbol, Rational> point;
        for (Symbol v : coeff.variables()) point[v] = rng.small_rational(cfg.height);
        if (coeff.eval(point) != 0) return;
    }
    throw GenericityFailure("witness substitution vanished " + std::to_string(cfg.retries + 1) +
                            " times on " + coeff.to_string());
}

// valuation of a nonzero polynomial at the place
long poly_ord(const MultiPoly& p, const Place& place, const WitnessConfig& cfg) {
    const Symbol v = place.variable;
    if (place.at_infinity) {
        long d = p.degree(v);
        certify_nonzero(p.leading_coeff_in(v), cfg);
        return -d;
    }
    MultiPoly shifted = p;
    if (place.point != 0) {
        std::map<Symbol, MultiPoly> shift;
        shift[v] = MultiPoly::variable(v) + MultiPoly::constant(place.point);
        shifted = p.substitute_poly(shift);
    }
    long k = shifted.ord(v);
    certify_nonzero(shifted.coeff_of(v, static_cast<std::uint32_t>(k)), cfg);
    return k;
}

}  // namespace

std::optional<long> ord_at(const RationalFunction& f, const Place& place, const WitnessConfig& cfg) {
    if (f.is_zero()) return std::nullopt;
    return poly_ord(f.num(), place, cfg) - poly_ord(f.den(), place, cfg);
}

std::optional<long> ord_at(const MultiPoly& f, const Place& place, const WitnessConfig& cfg) {
    if (f.is_zero()) return std::nullopt;
    return poly_ord(f, place, cfg);
}

}  // namespace painleve
