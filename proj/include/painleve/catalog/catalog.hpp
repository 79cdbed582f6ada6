#ifndef PAINLEVE_CATALOG_CATALOG_HPP
#define PAINLEVE_CATALOG_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "painleve/catalog/expr.hpp"
#include "painleve/curves/reduce.hpp"
#include "painleve/hamiltonian/lax.hpp"
#include "painleve/liu/stable.hpp"

namespace painleve {

struct DataIntegrity : std::runtime_error {
    explicit DataIntegrity(const std::string& what) : std::runtime_error(what) {}
};

struct SpectralTypeEntry {
    std::string type;     // the notation string
    std::string pattern;  // expected singularity pattern, e.g. "9/2", "4+1"
};

/// One named system: Hamiltonians and conserved quantities, optional Lax and
/// curve data where the source supplies them, and the pinned expected rows.
struct CatalogEntry {
    std::string name;
    std::vector<std::string> aliases;
    int dimension = 2;  // 2 or 4
    std::vector<SpectralTypeEntry> spectral_types;

    PhaseSpace space;
    std::optional<RationalFunction> H_delta;  // as printed, delta symbolic
    std::optional<RationalFunction> H;        // delta = 0 specialization
    std::optional<RationalFunction> G;        // second conserved quantity (4-dim)
    bool appendix_pair = false;               // (H,G) from the conserved-quantity appendix

    std::optional<LaxSystem> lax;

    /// Stored curve polynomial over (x, y, h[, g], params); absent when the
    /// source only supplies expected rows.
    std::optional<MultiPoly> curve_poly;
    Symbol curve_x = 0, curve_y = 0, curve_h = 0, curve_g = 0;

    // expected classification rows
    std::optional<std::string> kodaira, dynkin;             // 2-dim (Thm 4.2 style)
    std::optional<ExpectedRow> expected_h, expected_g;      // 4-dim table rows
    std::string row_name_h, row_name_g;                     // display labels of the table rows

    bool has_curve() const { return curve_poly.has_value(); }

    /// Curve for the requested fibration ("h" for 2-dim; "h"/"g" for 4-dim).
    SpectralCurve curve_for(const std::string& fibration) const;

    /// Level-set curve of the Hamiltonian (2-dim entries).
    SpectralCurve level_set() const;
};

struct Catalog {
    std::vector<CatalogEntry> entries;

    const CatalogEntry* find(const std::string& name_or_alias) const;
    std::vector<const CatalogEntry*> select(const std::vector<std::string>& names, bool all) const;
};

/// PAINLEVE_DATA_DIR env override, else the bundled data directory.
std::string default_data_dir();

/// Loads and cross-checks the bundled registry: 8 two-dimensional and 40
/// four-dimensional entries, every expected row matched against the pinned
/// tables file (checksum verified).
Catalog load_catalog(const std::string& data_dir = default_data_dir());

/// User-supplied curve JSON: {"shape": "g1"|"g2"|"spectral", ...}.
std::variant<WeierstrassG1, WeierstrassG2, SpectralCurve> load_user_curve(
    const nlohmann::json& j);

}  // namespace painleve

#endif
