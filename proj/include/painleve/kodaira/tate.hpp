#ifndef PAINLEVE_KODAIRA_TATE_HPP
#define PAINLEVE_KODAIRA_TATE_HPP

#include <string>

#include "painleve/algebra/places.hpp"
#include "painleve/curves/weierstrass.hpp"

#include <json.hpp>

namespace painleve {

struct SingularFamily : std::runtime_error {
    explicit SingularFamily(const std::string& what) : std::runtime_error(what) {}
};

struct Unclassifiable : std::runtime_error {
    explicit Unclassifiable(const std::string& what) : std::runtime_error(what) {}
};

enum class KodairaKind { I0, Im, Imstar, II, III, IV, IVstar, IIIstar, IIstar };

struct KodairaType {
    KodairaKind kind;
    long m = 0;  // index for Im / Im*

    std::string name() const;    // "I0", "I3", "I2*", "III*", ...
    std::string dynkin() const;  // "D_7^(1)", "E_8^(1)", "-", ...
    bool operator==(const KodairaType& o) const { return kind == o.kind && m == o.m; }
};

KodairaType kodaira_from_name(const std::string& name);

struct G1FiberReport {
    std::string system;
    long ord_delta = 0;
    long ord_j = 0;  // LONG_MIN stands for +infinity (j identically zero)
    KodairaType type{};

    nlohmann::json to_json() const;
};

/// Delta = 4a^3 + 27b^2 and j = 4a^3/Delta.
std::pair<MultiPoly, RationalFunction> delta_j(const WeierstrassG1& w);

/// (ord Delta, ord j) -> Kodaira type for a minimal model at the place.
/// ord_j_infinite marks j == 0 identically (ord j = +infinity).
KodairaType tate_classify(long ord_delta, long ord_j, bool ord_j_infinite = false);

/// Full pipeline at h = infinity: infinity model, Delta/j, valuations, table.
G1FiberReport classify_g1_at_infinity(const WeierstrassG1& w, const WitnessConfig& cfg = {});

}  // namespace painleve

#endif
