#ifndef PAINLEVE_CURVES_REDUCE_HPP
#define PAINLEVE_CURVES_REDUCE_HPP

#include <optional>

#include "painleve/curves/weierstrass.hpp"

namespace painleve {

struct UnsupportedShape : std::runtime_error {
    explicit UnsupportedShape(const std::string& what) : std::runtime_error(what) {}
};

struct GenusDrop : std::runtime_error {
    explicit GenusDrop(const std::string& what) : std::runtime_error(what) {}
};

/// Plane spectral curve F(x,y) = 0 with coefficients in the fibration
/// variable and generic spectators.
struct SpectralCurve {
    MultiPoly poly;
    Symbol x, y;
    Symbol fibration;
    std::optional<Symbol> spectator;
};

/// Record of the substitution taking the input curve to the reduced model;
/// apply_back() checks the exact birational certificate.
struct BirationalRecord {
    std::string description;
    // For quadratic shapes: y = (Y - b(x)) / (2 a(x)) after monicization by a.
    // For the biquadratic shape: x = (u^2 - beta)/alpha and y^2 = (P(x(u)) + u)/2.
    bool verified = false;
};

struct Reduction {
    std::variant<WeierstrassG1, WeierstrassG2> model;
    BirationalRecord record;
    /// present for biquadratic reductions: the radicand P^2 - 4Q
    std::optional<MultiPoly> radicand;
};

/// Shape-driven reduction of a supported spectral curve to Weierstrass form.
///   S1: y^2 = f(x)
///   S2: a(x) y^2 + b(x) y + c(x) = 0
///   S3: y^4 - P(x) y^2 + Q(x) = 0 with deg(P^2-4Q) = 1, + branch pinned
/// plus_branch=false selects the conjugate (u -> -u) branch of S3.
Reduction reduce_to_weierstrass(const SpectralCurve& c, bool plus_branch = true);

/// Level-set curve H(q,p) = h of a 2-dimensional Hamiltonian, with
/// denominators cleared; used for the Liouville-torus fibrations.
SpectralCurve level_set_curve(const RationalFunction& H, Symbol q, Symbol p, Symbol h);

}  // namespace painleve

#endif
