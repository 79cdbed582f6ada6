#include "painleve/catalog/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace painleve {

namespace {

namespace fs = std::filesystem;

nlohmann::json read_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw DataIntegrity("cannot open " + path.string());
    nlohmann::json j;
    in >> j;
    return j;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string canonical_row(const nlohmann::json& row) {
    // fixed field order so the checksum is stable
    std::string out;
    for (const char* key : {"entry", "name", "spectral_type", "nu_type", "dynkin", "stable",
                            "phi", "ogg", "nu_class"})
        out += row.value(key, std::string()) + "|";
    out += std::to_string(row.value("page", 0)) + "\n";
    return out;
}

ExpectedRow parse_row(const nlohmann::json& row) {
    ExpectedRow r;
    r.nu_type = row.at("nu_type").get<std::string>();
    r.dynkin = row.at("dynkin").get<std::string>();
    r.stable = row.at("stable").get<std::string>();
    r.phi = row.at("phi").get<std::string>();
    r.ogg = row.at("ogg").get<std::string>();
    r.nu_class = row.at("nu_class").get<std::string>();
    r.page = row.at("page").get<int>();
    return r;
}

RationalFunction parse_with_bindings(const std::string& text,
                                     const std::map<Symbol, RationalFunction>& bindings) {
    RationalFunction e = parse_expression(text);
    if (bindings.empty()) return e;
    return e.substitute(bindings);
}

}  // namespace

SpectralCurve CatalogEntry::curve_for(const std::string& fibration) const {
    if (!curve_poly) throw DataIntegrity("entry " + name + " carries no curve data");
    SpectralCurve c;
    c.poly = *curve_poly;
    c.x = curve_x;
    c.y = curve_y;
    if (fibration == "h") {
        c.fibration = curve_h;
        if (curve_g != 0) c.spectator = curve_g;
    } else if (fibration == "g") {
        if (curve_g == 0) throw DataIntegrity("entry " + name + " has no second fibration");
        c.fibration = curve_g;
        c.spectator = curve_h;
    } else {
        throw DataIntegrity("unknown fibration " + fibration);
    }
    return c;
}

SpectralCurve CatalogEntry::level_set() const {
    if (!H) throw DataIntegrity("entry " + name + " carries no Hamiltonian");
    if (space.pairs.size() != 1)
        throw DataIntegrity("level-set curves are built for 2-dimensional systems only");
    Symbol h = curve_h != 0 ? curve_h : sym("h");
    return level_set_curve(*H, space.pairs[0].first, space.pairs[0].second, h);
}

const CatalogEntry* Catalog::find(const std::string& key) const {
    for (const auto& e : entries) {
        if (e.name == key) return &e;
        for (const auto& a : e.aliases)
            if (a == key) return &e;
    }
    return nullptr;
}

std::vector<const CatalogEntry*> Catalog::select(const std::vector<std::string>& names,
                                                 bool all) const {
    std::vector<const CatalogEntry*> out;
    if (all) {
        for (const auto& e : entries) out.push_back(&e);
        return out;
    }
    for (const auto& n : names) {
        const CatalogEntry* e = find(n);
        if (!e) throw DataIntegrity("unknown system " + n);
        out.push_back(e);
    }
    return out;
}

std::string default_data_dir() {
    if (const char* env = std::getenv("PAINLEVE_DATA_DIR")) return env;
#ifdef PAINLEVE_DEFAULT_DATA_DIR
    return PAINLEVE_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

Catalog load_catalog(const std::string& data_dir) {
    const fs::path root(data_dir);
    nlohmann::json tables = read_json(root / "expected_tables.json");

    // checksum over the canonical serialization of every row
    std::string canon;
    for (const char* set : {"g1", "h", "g"})
        for (const auto& row : tables.at(set)) canon += canonical_row(row);
    const std::string want = tables.at("checksum").get<std::string>();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(canon)));
    if (want != buf)
        throw DataIntegrity("expected_tables.json checksum mismatch: computed " +
                            std::string(buf));

    std::map<std::string, nlohmann::json> g1rows, hrows, growsM;
    for (const auto& row : tables.at("g1")) g1rows[row.at("entry").get<std::string>()] = row;
    for (const auto& row : tables.at("h")) hrows[row.at("entry").get<std::string>()] = row;
    for (const auto& row : tables.at("g")) growsM[row.at("entry").get<std::string>()] = row;
    if (g1rows.size() != 8 || hrows.size() != 40 || growsM.size() != 40)
        throw DataIntegrity("expected 8 + 40 + 40 table rows");

    Catalog cat;
    std::vector<fs::path> files;
    for (const auto& de : fs::directory_iterator(root / "systems"))
        if (de.path().extension() == ".json") files.push_back(de.path());
    std::sort(files.begin(), files.end());

    for (const auto& path : files) {
        nlohmann::json j = read_json(path);
        CatalogEntry e;
        e.name = j.at("name").get<std::string>();
        if (j.contains("aliases"))
            for (const auto& a : j["aliases"]) e.aliases.push_back(a.get<std::string>());
        e.dimension = j.at("dimension").get<int>();
        for (const auto& st : j.at("spectral_types"))
            e.spectral_types.push_back(
                {st.at("type").get<std::string>(), st.at("pattern").get<std::string>()});

        // phase space
        if (j.contains("phase")) {
            const auto& ph = j["phase"];
            for (const auto& pr : ph.at("pairs"))
                e.space.pairs.emplace_back(sym(pr.at(0).get<std::string>()),
                                           sym(pr.at(1).get<std::string>()));
            if (ph.contains("parameters"))
                for (const auto& p : ph["parameters"]) e.space.parameters.push_back(sym(p.get<std::string>()));
            e.space.time = sym(ph.value("time", "tt"));
            e.space.delta = sym(ph.value("delta", "delta"));
            if (ph.contains("gauge"))
                for (const auto& gf : ph["gauge"])
                    e.space.gauge_flows.emplace_back(sym(gf.at(0).get<std::string>()),
                                                     parse_expression(gf.at(1).get<std::string>()));
        }

        // parameter bindings applied to every stored expression
        std::map<Symbol, RationalFunction> bindings;
        if (j.contains("bindings"))
            for (const auto& [k, v] : j["bindings"].items())
                bindings[sym(k)] = parse_expression(v.get<std::string>());

        std::map<Symbol, RationalFunction> delta0{{sym("delta"), RationalFunction(Rational(0))}};
        if (j.contains("hamiltonians")) {
            const auto& hs = j["hamiltonians"];
            if (hs.contains("h")) {
                e.H_delta = parse_with_bindings(hs["h"].get<std::string>(), bindings);
                e.H = e.H_delta->substitute(delta0);
            }
            if (hs.contains("g")) {
                RationalFunction g = parse_with_bindings(hs["g"].get<std::string>(), bindings);
                e.G = g.substitute(delta0);
            }
        }
        e.appendix_pair = j.value("appendix_pair", false);

        if (j.contains("lax")) {
            const auto& lj = j["lax"];
            LaxSystem sys;
            sys.spectral_x = sym(lj.value("x", "x"));
            const auto& A = lj.at("A");
            std::size_t n = A.size();
            sys.A = RFMatrix(n);
            sys.B = RFMatrix(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) {
                    sys.A.at(i, k) = parse_with_bindings(A[i][k].get<std::string>(), bindings);
                    sys.B.at(i, k) = parse_with_bindings(lj.at("B")[i][k].get<std::string>(), bindings);
                }
            sys.hamiltonian_delta =
                e.H_delta ? *e.H_delta
                          : parse_with_bindings(lj.at("hamiltonian").get<std::string>(), bindings);
            sys.space = e.space;
            e.lax = std::move(sys);
        }

        if (j.contains("curve")) {
            const auto& cj = j["curve"];
            RationalFunction cp = parse_with_bindings(cj.at("poly").get<std::string>(), bindings);
            if (!cp.is_polynomial())
                throw DataIntegrity("curve polynomial for " + e.name + " has a denominator");
            e.curve_poly = cp.as_polynomial();
            e.curve_x = sym(cj.value("x", "x"));
            e.curve_y = sym(cj.value("y", "y"));
            e.curve_h = sym(cj.value("h", "h"));
            if (cj.contains("g")) e.curve_g = sym(cj["g"].get<std::string>());
        } else {
            e.curve_h = sym("h");
        }

        // join the pinned expected rows
        if (e.dimension == 2) {
            auto it = g1rows.find(e.name);
            if (it == g1rows.end()) throw DataIntegrity("no genus-1 row for " + e.name);
            e.kodaira = it->second.at("kodaira").get<std::string>();
            e.dynkin = it->second.at("dynkin").get<std::string>();
        } else {
            auto ith = hrows.find(e.name);
            auto itg = growsM.find(e.name);
            if (ith == hrows.end() || itg == growsM.end())
                throw DataIntegrity("missing table rows for " + e.name);
            e.expected_h = parse_row(ith->second);
            e.expected_g = parse_row(itg->second);
            e.row_name_h = ith->second.at("name").get<std::string>();
            e.row_name_g = itg->second.at("name").get<std::string>();
            // the spectral-type column of the pinned row must match the entry
            if (ith->second.at("spectral_type").get<std::string>() != e.spectral_types.at(0).type ||
                itg->second.at("spectral_type").get<std::string>() != e.spectral_types.at(0).type)
                throw DataIntegrity("spectral type mismatch against tables for " + e.name);
        }
        cat.entries.push_back(std::move(e));
    }

    int dim2 = 0, dim4 = 0;
    for (const auto& e : cat.entries) (e.dimension == 2 ? dim2 : dim4)++;
    if (dim2 != 8 || dim4 != 40)
        throw DataIntegrity("catalog must hold 8 two-dimensional and 40 four-dimensional entries, got " +
                            std::to_string(dim2) + "+" + std::to_string(dim4));
    return cat;
}

std::variant<WeierstrassG1, WeierstrassG2, SpectralCurve> load_user_curve(const nlohmann::json& j) {
    const std::string shape = j.at("shape").get<std::string>();
    Symbol fib = sym(j.value("fibration_variable", "h"));
    if (shape == "g1") {
        return normalize_g1(MultiPoly::from_json(j.at("a")), MultiPoly::from_json(j.at("b")), fib);
    }
    if (shape == "g2") {
        std::array<MultiPoly, 7> a;
        for (int i = 0; i <= 6; ++i)
            a[static_cast<size_t>(i)] = MultiPoly::from_json(j.at("a" + std::to_string(i)));
        return normalize_g2(std::move(a), fib);
    }
    if (shape == "spectral") {
        SpectralCurve c;
        if (j.at("poly").is_string())
            c.poly = parse_expression(j["poly"].get<std::string>()).as_polynomial();
        else
            c.poly = MultiPoly::from_json(j.at("poly"));
        c.x = sym(j.value("x", "x"));
        c.y = sym(j.value("y", "y"));
        c.fibration = fib;
        if (j.contains("spectator")) c.spectator = sym(j["spectator"].get<std::string>());
        return c;
    }
    throw DataIntegrity("unknown curve shape " + shape);
}

}  // namespace painleve
