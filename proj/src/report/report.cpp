#include "painleve/report/report.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace painleve {

OutputFormat format_from_name(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "markdown") return OutputFormat::Markdown;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown format " + s);
}

G1FiberReport classify_entry_g1(const CatalogEntry& e, const WitnessConfig& cfg,
                                bool use_level_set) {
    SpectralCurve c = (!use_level_set && e.has_curve()) ? e.curve_for("h") : e.level_set();
    Reduction red = reduce_to_weierstrass(c);
    const auto* g1 = std::get_if<WeierstrassG1>(&red.model);
    if (!g1) throw GenusDrop("entry " + e.name + " reduced to genus 2");
    G1FiberReport rep = classify_g1_at_infinity(*g1, cfg);
    rep.system = e.name;
    return rep;
}

G2FiberReport classify_entry_g2(const CatalogEntry& e, const std::string& fibration,
                                const WitnessConfig& cfg) {
    SpectralCurve c = e.curve_for(fibration);
    Reduction red = reduce_to_weierstrass(c);
    const auto* g2 = std::get_if<WeierstrassG2>(&red.model);
    if (!g2) throw GenusDrop("entry " + e.name + " reduced to genus 1");
    std::optional<ExpectedRow> expected =
        fibration == "h" ? e.expected_h : e.expected_g;
    G2FiberReport rep = classify_g2_at_infinity(*g2, expected, cfg);
    rep.system = e.name;
    rep.fibration = fibration;
    return rep;
}

std::vector<G1Row> genus1_table(const Catalog& cat, const WitnessConfig& cfg) {
    // the source table's column order
    static const char* order[] = {"H_VI",       "H_V",  "H_III(D6)", "H_III(D7)",
                                  "H_III(D8)",  "H_IV", "H_II",      "H_I"};
    std::vector<G1Row> rows;
    for (const char* name : order) {
        const CatalogEntry* e = cat.find(name);
        if (!e) throw DataIntegrity(std::string("missing catalog entry ") + name);
        G1Row row;
        row.name = name;
        row.report = classify_entry_g1(*e, cfg);
        row.expected_kodaira = e->kodaira.value_or("");
        row.expected_dynkin = e->dynkin.value_or("");
        row.match = row.report.type.name() == row.expected_kodaira &&
                    row.report.type.dynkin() == row.expected_dynkin;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<G2Row> genus2_table(const Catalog& cat, const std::string& fibration,
                                const WitnessConfig& cfg, int jobs) {
    std::vector<const CatalogEntry*> dim4;
    for (const auto& e : cat.entries)
        if (e.dimension == 4) dim4.push_back(&e);

    std::vector<G2Row> rows(dim4.size());
    auto work = [&](size_t i) {
        const CatalogEntry& e = *dim4[i];
        G2Row row;
        row.entry = e.name;
        const auto& exp = fibration == "h" ? e.expected_h : e.expected_g;
        row.row_name = fibration == "h" ? e.row_name_h : e.row_name_g;
        row.spectral_type = e.spectral_types.at(0).type;
        row.fibration = fibration;
        row.expected = *exp;
        if (e.has_curve()) {
            row.report = classify_entry_g2(e, fibration, cfg);
            row.status = "computed";
            row.agreement = row.report->agreement;
        } else {
            row.status = "expected";
        }
        rows[i] = std::move(row);
    };
    if (jobs <= 1) {
        for (size_t i = 0; i < dim4.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < dim4.size(); i = next.fetch_add(1)) work(i);
            });
        for (auto& th : pool) th.join();
    }
    return rows;
}

namespace {

std::string join_cells(const std::vector<std::string>& cells, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += sep;
        out += cells[i];
    }
    return out;
}

std::string render_table(const std::vector<std::vector<std::string>>& grid, OutputFormat fmt) {
    std::ostringstream os;
    if (fmt == OutputFormat::Csv) {
        for (const auto& row : grid) os << join_cells(row, ",") << "\n";
        return os.str();
    }
    std::vector<size_t> width(grid[0].size(), 0);
    for (const auto& row : grid)
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto emit = [&](const std::vector<std::string>& row) {
        os << "|";
        for (size_t i = 0; i < row.size(); ++i) {
            os << " " << row[i] << std::string(width[i] - row[i].size(), ' ') << " |";
        }
        os << "\n";
    };
    emit(grid[0]);
    if (fmt == OutputFormat::Markdown) {
        os << "|";
        for (size_t i = 0; i < grid[0].size(); ++i) os << std::string(width[i] + 2, '-') << "|";
        os << "\n";
    } else {
        os << std::string(join_cells(grid[0], "   ").size() + 8, '-') << "\n";
    }
    for (size_t r = 1; r < grid.size(); ++r) emit(grid[r]);
    return os.str();
}

}  // namespace

std::string render_genus1(const std::vector<G1Row>& rows, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json row = r.report.to_json();
            row["expected_kodaira"] = r.expected_kodaira;
            row["expected_dynkin"] = r.expected_dynkin;
            row["match"] = r.match;
            j.push_back(row);
        }
        return j.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"Hamiltonian", "ordDelta", "ordJ", "Kodaira type", "Dynkin type", "status"});
    for (const auto& r : rows)
        grid.push_back({r.name, std::to_string(r.report.ord_delta), std::to_string(r.report.ord_j),
                        r.report.type.name(), r.report.type.dynkin(),
                        r.match ? "computed" : "MISMATCH"});
    return render_table(grid, fmt);
}

std::string render_genus2(const std::vector<G2Row>& rows, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json row;
            row["entry"] = r.entry;
            row["name"] = r.row_name;
            row["spectral_type"] = r.spectral_type;
            row["fibration"] = r.fibration;
            row["expected"] = r.expected.to_json();
            row["status"] = r.status;
            if (r.report) {
                row["computed"] = r.report->to_json();
                row["agreement"] = r.agreement;
            }
            j.push_back(row);
        }
        return j.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"Hamiltonian", "spectral type", "N-U type", "Dynkin", "stable", "Phi", "Ogg",
                    "NU", "page", "status"});
    for (const auto& r : rows) {
        std::string status = r.status;
        if (r.report)
            status = r.agreement ? "computed:" + stable_type_name(r.report->stable)
                                 : "DISAGREES:" + stable_type_name(r.report->stable);
        grid.push_back({r.row_name, r.spectral_type, r.expected.nu_type, r.expected.dynkin,
                        r.expected.stable, r.expected.phi, r.expected.ogg, r.expected.nu_class,
                        "p." + std::to_string(r.expected.page), status});
    }
    return render_table(grid, fmt);
}

VerificationReport verify_entry(const CatalogEntry& e, const WitnessConfig& cfg) {
    if (!e.H) throw DataIntegrity("entry " + e.name + " has no Hamiltonian to verify");
    VerificationReport rep;
    if (e.dimension == 4 && e.G) {
        rep = verify_integrable(*e.H, *e.G, e.space, cfg);
    } else {
        // 2-dimensional: the Hamiltonian itself is the conserved quantity
        rep = verify_integrable(*e.H, *e.H, e.space, cfg);
        rep.pass = rep.bracket_zero && rep.jacobian_rank == 1;
    }
    rep.system = e.name;
    if (e.lax) {
        bool ok = lax_residual(*e.lax, Rational(0)).is_zero();
        for (std::size_t k = 1; ok && k <= e.lax->A.size(); ++k)
            ok = trace_power_conservation(*e.lax, k).is_zero();
        rep.residual_zero = ok;
        rep.pass = rep.pass && ok;
    }
    return rep;
}

}  // namespace painleve
