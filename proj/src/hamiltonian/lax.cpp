#include "painleve/hamiltonian/lax.hpp"

namespace painleve {

RationalFunction LaxSystem::hamiltonian_at(const RationalFunction& delta_value) const {
    if (space.delta == 0 || !hamiltonian_delta.uses(space.delta)) return hamiltonian_delta;
    std::map<Symbol, RationalFunction> bind{{space.delta, delta_value}};
    return hamiltonian_delta.substitute(bind);
}

RFMatrix lax_residual(const LaxSystem& sys, const RationalFunction& delta_value) {
    RationalFunction H = sys.hamiltonian_at(delta_value);
    RFMatrix dA = time_derivative(sys.A, H, sys.space, delta_value);
    RFMatrix r = dA + sys.A.commutator(sys.B);
    if (!delta_value.is_zero()) {
        RFMatrix dBdx = sys.B.map([&](const RationalFunction& e) { return e.derivative(sys.spectral_x); });
        r = r - dBdx.scale(delta_value);
    }
    return r;
}

RFMatrix lax_residual(const LaxSystem& sys, const Rational& delta_value) {
    return lax_residual(sys, RationalFunction(delta_value));
}

RationalFunction trace_power_conservation(const LaxSystem& sys, std::size_t k) {
    RFMatrix Ak = sys.A;
    for (std::size_t i = 1; i < k; ++i) Ak = Ak * sys.A;
    RationalFunction tr = Ak.trace();
    return time_derivative(tr, sys.hamiltonian_at(RationalFunction()), sys.space, RationalFunction());
}

MultiPoly spectral_curve_poly(const LaxSystem& sys, Symbol y) {
    return sys.A.char_poly(y);
}

}  // namespace painleve
