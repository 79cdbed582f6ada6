#include "painleve/liu/stable.hpp"

#include <sstream>

namespace painleve {

std::string stable_type_name(StableType t) {
    switch (t) {
        case StableType::I: return "I";
        case StableType::II: return "II";
        case StableType::III: return "III";
        case StableType::IV: return "IV";
        case StableType::V: return "V";
        case StableType::VI: return "VI";
        case StableType::VII: return "VII";
    }
    return "?";
}

StableType stable_type_from_name(const std::string& s) {
    if (s == "I") return StableType::I;
    if (s == "II") return StableType::II;
    if (s == "III") return StableType::III;
    if (s == "IV") return StableType::IV;
    if (s == "V") return StableType::V;
    if (s == "VI") return StableType::VI;
    if (s == "VII") return StableType::VII;
    throw StableTypeError("unknown stable type " + s);
}

OrdMap ords_of(const IgusaData& d, const Place& place, const WitnessConfig& cfg) {
    OrdMap m;
    m["J2"] = ord_at(d.J2, place, cfg);
    m["J4"] = ord_at(d.J4, place, cfg);
    m["J6"] = ord_at(d.J6, place, cfg);
    m["J8"] = ord_at(d.J8, place, cfg);
    m["J10"] = ord_at(d.J10, place, cfg);
    m["I2"] = ord_at(d.I2, place, cfg);
    m["I4"] = ord_at(d.I4, place, cfg);
    m["I12"] = ord_at(d.I12, place, cfg);
    return m;
}

namespace {

// signed valuation combination with +infinity handling:
// value(sum c_i * v_i) compared against zero
struct Val {
    bool inf;
    long v;
};

Val get(const OrdMap& o, const std::string& k) {
    auto it = o.find(k);
    if (it == o.end()) throw StableTypeError("missing valuation for " + k);
    if (!it->second) return {true, 0};
    return {false, *it->second};
}

// c1*a - c2*b with either side possibly infinite; returns {sign category}
// cmp >= 0 ("in R"), > 0 ("in m"), == 0 ("invertible")
bool ge0(const Val& a, long ca, const Val& b, long cb) {
    if (a.inf) return true;
    if (b.inf) return false;
    return ca * a.v - cb * b.v >= 0;
}
bool gt0(const Val& a, long ca, const Val& b, long cb) {
    if (a.inf) return true;
    if (b.inf) return false;
    return ca * a.v - cb * b.v > 0;
}
bool eq0(const Val& a, long ca, const Val& b, long cb) {
    if (a.inf || b.inf) return false;
    return ca * a.v - cb * b.v == 0;
}

std::string render(const OrdMap& o) {
    std::ostringstream os;
    for (const auto& [k, v] : o) {
        os << k << "=";
        if (v)
            os << *v;
        else
            os << "+inf";
        os << " ";
    }
    return os.str();
}

}  // namespace

StableType stable_type(const OrdMap& o) {
    const Val J2 = get(o, "J2"), J4 = get(o, "J4"), J6 = get(o, "J6"), J8 = get(o, "J8"),
              J10 = get(o, "J10"), I2 = get(o, "I2"), I4 = get(o, "I4"), I12 = get(o, "I12");
    const Val J[6] = {Val{}, J2, J4, J6, J8, J10};  // J[i] = J_{2i}

    if (J10.inf)
        throw StableTypeError("J10 vanishes identically; not a generic genus-2 pencil");

    // (I)  J_{2i}^5 J10^-i in R for all i <= 5
    bool condI = true;
    for (int i = 1; i <= 5; ++i) condI = condI && ge0(J[i], 5, J10, i);

    // (II) J_{2i}^6 I12^-i in R for all i, and J10^6 I12^-5 in m
    bool condII = true;
    for (int i = 1; i <= 5; ++i) condII = condII && ge0(J[i], 6, I12, i);
    condII = condII && gt0(J10, 6, I12, 5);

    // (III) J_{2i}^6 I12^-i in R, J10^2 I4^-5 in m, I12 I4^-3 in m,
    //       and J4 I4^-1 or J6^2 I4^-3 invertible
    bool condIII = true;
    for (int i = 1; i <= 5; ++i) condIII = condIII && ge0(J[i], 6, I12, i);
    condIII = condIII && gt0(J10, 2, I4, 5) && gt0(I12, 1, I4, 3) &&
              (eq0(J4, 1, I4, 1) || eq0(J6, 2, I4, 3));

    // (IV) J_{2i}^2 I4^-i in m for 2 <= i <= 5
    bool condIV = true;
    for (int i = 2; i <= 5; ++i) condIV = condIV && gt0(J[i], 2, I4, i);

    // (V*) I4 I2^-2, J10 I2^-5, I12 I2^-6 in m
    bool condVs = gt0(I4, 1, I2, 2) && gt0(J10, 1, I2, 5) && gt0(I12, 1, I2, 6);

    std::vector<StableType> hits;
    if (condI) hits.push_back(StableType::I);
    if (condII) hits.push_back(StableType::II);
    if (condIII) hits.push_back(StableType::III);
    if (condIV) hits.push_back(StableType::IV);
    if (condVs) {
        // refinements: (V) I4^3 J10^-1 I2^-1 in R and I12 J10^-1 I2^-1 in R
        //              (VI) I4^3 I12^-1 in R and J10 I2 I12^-1 in m
        //              (VII) I12 I4^-3 in m and J10 I2 I4^-3 in m
        auto ge0_pair = [&](const Val& a, long ca, const Val& b1, const Val& b2) {
            if (a.inf) return true;
            if (b1.inf || b2.inf) return false;
            return ca * a.v - b1.v - b2.v >= 0;
        };
        auto gt0_pair = [&](const Val& a1, const Val& a2, const Val& b, long cb) {
            if (a1.inf || a2.inf) return true;
            if (b.inf) return false;
            return a1.v + a2.v - cb * b.v > 0;
        };
        bool condV = ge0_pair(I4, 3, J10, I2) && ge0_pair(I12, 1, J10, I2);
        bool condVI = ge0(I4, 3, I12, 1) && gt0_pair(J10, I2, I12, 1);
        bool condVII = gt0(I12, 1, I4, 3) && gt0_pair(J10, I2, I4, 3);
        int sub = 0;
        if (condV) {
            hits.push_back(StableType::V);
            ++sub;
        }
        if (condVI) {
            hits.push_back(StableType::VI);
            ++sub;
        }
        if (condVII) {
            hits.push_back(StableType::VII);
            ++sub;
        }
        if (sub == 0)
            throw StableTypeError("condition V* holds but no refinement matches: " + render(o));
    }
    if (hits.empty()) throw StableTypeError("no stable-type condition matches: " + render(o));
    if (hits.size() > 1) {
        std::string names;
        for (auto t : hits) names += stable_type_name(t) + " ";
        throw StableTypeError("multiple stable-type conditions match (" + names + "): " + render(o));
    }
    return hits[0];
}

nlohmann::json ExpectedRow::to_json() const {
    nlohmann::json j;
    j["nu_type"] = nu_type;
    j["dynkin"] = dynkin;
    j["stable"] = stable;
    j["phi"] = phi;
    j["ogg"] = ogg;
    j["nu_class"] = nu_class;
    j["page"] = page;
    return j;
}

nlohmann::json G2FiberReport::to_json() const {
    nlohmann::json j;
    j["system"] = system;
    j["fibration"] = fibration;
    nlohmann::json o;
    for (const auto& [k, v] : ords)
        o[k] = v ? nlohmann::json(*v) : nlohmann::json("+inf");
    j["ords"] = o;
    j["stable"] = stable_type_name(stable);
    if (expected) {
        j["expected"] = expected->to_json();
        j["agreement"] = agreement;
    }
    j["witness_seed"] = witness_seed;
    return j;
}

G2FiberReport classify_g2_at_infinity(const WeierstrassG2& w,
                                      const std::optional<ExpectedRow>& expected,
                                      const WitnessConfig& cfg) {
    InfinityModel m = infinity_model_g2(w);
    const auto& far = std::get<WeierstrassG2>(m.model);
    IgusaData data = igusa_invariants(far);
    Place at0 = Place::finite(m.hbar, Rational(0));
    G2FiberReport rep;
    rep.ords = ords_of(data, at0, cfg);
    rep.stable = stable_type(rep.ords);
    rep.witness_seed = cfg.seed;
    if (expected) {
        rep.expected = expected;
        rep.agreement = stable_type_from_name(expected->stable) == rep.stable;
    }
    return rep;
}

}  // namespace painleve
