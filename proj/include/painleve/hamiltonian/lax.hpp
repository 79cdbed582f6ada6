#ifndef PAINLEVE_HAMILTONIAN_LAX_HPP
#define PAINLEVE_HAMILTONIAN_LAX_HPP

#include <string>

#include "painleve/hamiltonian/bracket.hpp"

namespace painleve {

/// A delta-deformed Lax pair: square matrices A(x), B(x) over the phase
/// field together with the Hamiltonian solving the deformation equation.
struct LaxSystem {
    RFMatrix A;
    RFMatrix B;
    RationalFunction hamiltonian_delta;  // H(delta), delta symbolic
    Symbol spectral_x = 0;
    PhaseSpace space;

    RationalFunction hamiltonian_at(const RationalFunction& delta_value) const;
};

/// dA/dt - delta dB/dx + [A,B] with the flow of H(delta := delta_value);
/// identically zero for a valid pair.
RFMatrix lax_residual(const LaxSystem& sys, const RationalFunction& delta_value);
RFMatrix lax_residual(const LaxSystem& sys, const Rational& delta_value);

/// d/dt tr(A^k) along the flow at delta = 0; zero for a valid pair.
RationalFunction trace_power_conservation(const LaxSystem& sys, std::size_t k);

/// det(yI - A) with denominators cleared, as a polynomial in (x, y, phase
/// symbols, parameters).
MultiPoly spectral_curve_poly(const LaxSystem& sys, Symbol y);

}  // namespace painleve

#endif
