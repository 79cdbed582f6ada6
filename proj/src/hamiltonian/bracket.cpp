#include "painleve/hamiltonian/bracket.hpp"

namespace painleve {

RationalFunction poisson_bracket(const RationalFunction& F, const RationalFunction& G,
                                 const PhaseSpace& space) {
    RationalFunction acc;
    for (const auto& [q, p] : space.pairs) {
        acc = acc + F.derivative(q) * G.derivative(p) - G.derivative(q) * F.derivative(p);
    }
    return acc;
}

RationalFunction time_derivative(const RationalFunction& F, const RationalFunction& H,
                                 const PhaseSpace& space, const RationalFunction& delta_value) {
    RationalFunction d = poisson_bracket(F, H, space);
    if (!delta_value.is_zero() && space.time != 0 && F.uses(space.time))
        d = d + delta_value * F.derivative(space.time);
    for (const auto& [u, udot] : space.gauge_flows) {
        if (!udot.is_zero() && F.uses(u)) d = d + udot * F.derivative(u);
    }
    return d;
}

RFMatrix time_derivative(const RFMatrix& F, const RationalFunction& H, const PhaseSpace& space,
                         const RationalFunction& delta_value) {
    return F.map([&](const RationalFunction& e) { return time_derivative(e, H, space, delta_value); });
}

}  // namespace painleve
