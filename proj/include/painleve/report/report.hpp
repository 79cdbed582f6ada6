#ifndef PAINLEVE_REPORT_REPORT_HPP
#define PAINLEVE_REPORT_REPORT_HPP

#include "painleve/catalog/catalog.hpp"
#include "painleve/hamiltonian/verify.hpp"
#include "painleve/kodaira/tate.hpp"

namespace painleve {

enum class OutputFormat { Text, Markdown, Csv, Json };
OutputFormat format_from_name(const std::string& s);

/// Classifies a 2-dimensional entry at H = infinity.  use_level_set forces the
/// Hamiltonian level-set fibration; otherwise the stored spectral curve is
/// preferred when present.
G1FiberReport classify_entry_g1(const CatalogEntry& e, const WitnessConfig& cfg = {},
                                bool use_level_set = false);

/// Classifies a 4-dimensional entry's h- or g-fibration.
G2FiberReport classify_entry_g2(const CatalogEntry& e, const std::string& fibration,
                                const WitnessConfig& cfg = {});

struct G1Row {
    std::string name;
    G1FiberReport report;
    std::string expected_kodaira, expected_dynkin;
    bool match = false;
};

struct G2Row {
    std::string entry;
    std::string row_name;
    std::string spectral_type;
    std::string fibration;
    ExpectedRow expected;
    std::optional<G2FiberReport> report;  // only entries carrying curves compute
    std::string status;                   // "computed" | "expected"
    bool agreement = true;
};

std::vector<G1Row> genus1_table(const Catalog& cat, const WitnessConfig& cfg = {});
std::vector<G2Row> genus2_table(const Catalog& cat, const std::string& fibration,
                                const WitnessConfig& cfg = {}, int jobs = 1);

std::string render_genus1(const std::vector<G1Row>& rows, OutputFormat fmt);
std::string render_genus2(const std::vector<G2Row>& rows, OutputFormat fmt);

/// Runs every integrability check the entry supports.
VerificationReport verify_entry(const CatalogEntry& e, const WitnessConfig& cfg = {});

}  // namespace painleve

#endif
