#ifndef PAINLEVE_HAMILTONIAN_PHASE_SPACE_HPP
#define PAINLEVE_HAMILTONIAN_PHASE_SPACE_HPP

#include <utility>
#include <vector>

#include "painleve/algebra/rational_function.hpp"

namespace painleve {

/// Canonical coordinates plus the distinguished symbols of an autonomous
/// system: parameters never flow, the time symbol flows with rate delta, and
/// gauge symbols follow a prescribed derivative (zero unless the Lax pair
/// demands otherwise).
struct PhaseSpace {
    std::vector<std::pair<Symbol, Symbol>> pairs;  // (q_i, p_i)
    std::vector<Symbol> parameters;
    Symbol time = 0;       // \tilde t; d time/dt = delta
    Symbol delta = 0;      // deformation parameter symbol
    std::vector<std::pair<Symbol, RationalFunction>> gauge_flows;

    std::size_t dimension() const { return 2 * pairs.size(); }
};

}  // namespace painleve

#endif
