#ifndef PAINLEVE_HAMILTONIAN_BRACKET_HPP
#define PAINLEVE_HAMILTONIAN_BRACKET_HPP

#include "painleve/hamiltonian/matrix.hpp"
#include "painleve/hamiltonian/phase_space.hpp"

namespace painleve {

/// {F,G} = sum_i dF/dq_i dG/dp_i - dG/dq_i dF/dp_i over the space's pairs.
RationalFunction poisson_bracket(const RationalFunction& F, const RationalFunction& G,
                                 const PhaseSpace& space);

/// Total time derivative along the flow of H with deformation value delta:
/// dF/dt = {F,H} + delta * dF/dtime + sum_gauge du/dt * dF/du.
RationalFunction time_derivative(const RationalFunction& F, const RationalFunction& H,
                                 const PhaseSpace& space, const RationalFunction& delta_value);

RFMatrix time_derivative(const RFMatrix& F, const RationalFunction& H, const PhaseSpace& space,
                         const RationalFunction& delta_value);

}  // namespace painleve

#endif
