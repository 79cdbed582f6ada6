#ifndef PAINLEVE_HAMILTONIAN_VERIFY_HPP
#define PAINLEVE_HAMILTONIAN_VERIFY_HPP

#include <optional>
#include <string>

#include "painleve/algebra/places.hpp"
#include "painleve/hamiltonian/bracket.hpp"

#include <json.hpp>

namespace painleve {

struct WitnessDegeneracy : std::runtime_error {
    explicit WitnessDegeneracy(const std::string& what) : std::runtime_error(what) {}
};

struct VerificationReport {
    std::string system;
    bool bracket_zero = false;
    std::size_t jacobian_rank = 0;
    std::optional<bool> residual_zero;  // set when the entry carries a Lax pair
    std::uint64_t witness_seed = 0;
    bool pass = false;

    nlohmann::json to_json() const;
};

/// Liouville-integrability check for a conserved pair: {G,H} == 0 symbolically
/// and the 2 x dim Jacobian of (H,G) has full rank n at every witness point.
VerificationReport verify_integrable(const RationalFunction& H, const RationalFunction& G,
                                     const PhaseSpace& space, const WitnessConfig& cfg = {},
                                     int witness_points = 5);

}  // namespace painleve

#endif
