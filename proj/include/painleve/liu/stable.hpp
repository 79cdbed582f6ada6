#ifndef PAINLEVE_LIU_STABLE_HPP
#define PAINLEVE_LIU_STABLE_HPP

#include <map>
#include <optional>
#include <string>

#include "painleve/algebra/places.hpp"
#include "painleve/liu/igusa.hpp"

#include <json.hpp>

namespace painleve {

struct StableTypeError : std::runtime_error {
    explicit StableTypeError(const std::string& what) : std::runtime_error(what) {}
};

/// The seven stable genus-2 fibre shapes.
enum class StableType { I, II, III, IV, V, VI, VII };

std::string stable_type_name(StableType t);
StableType stable_type_from_name(const std::string& s);

/// Valuations at the place; nullopt is the +infinity sentinel (identically
/// zero invariant).
using OrdMap = std::map<std::string, std::optional<long>>;

OrdMap ords_of(const IgusaData& data, const Place& place, const WitnessConfig& cfg = {});

/// Liu's decision procedure on the valuation vector.  Membership tests read
/// f in R as ord >= 0, f in m as ord > 0, invertible as ord == 0.  Exactly one
/// of the conditions I..IV, V* must hold, and V* refines into V/VI/VII;
/// anything else throws StableTypeError with the full vector.
StableType stable_type(const OrdMap& ords);

/// Expected-row metadata echoed from the catalog (never computed here).
struct ExpectedRow {
    std::string nu_type, dynkin, stable, phi, ogg, nu_class;
    int page = 0;

    nlohmann::json to_json() const;
};

struct G2FiberReport {
    std::string system;
    std::string fibration;  // "h" or "g"
    OrdMap ords;
    StableType stable{};
    std::optional<ExpectedRow> expected;
    bool agreement = false;  // stable column vs computed, when expected present
    std::uint64_t witness_seed = 0;

    nlohmann::json to_json() const;
};

G2FiberReport classify_g2_at_infinity(const WeierstrassG2& w,
                                      const std::optional<ExpectedRow>& expected = std::nullopt,
                                      const WitnessConfig& cfg = {});

}  // namespace painleve

#endif
