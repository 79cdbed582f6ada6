#include "painleve/kodaira/tate.hpp"

#include <climits>

namespace painleve {

std::string KodairaType::name() const {
    switch (kind) {
        case KodairaKind::I0: return "I0";
        case KodairaKind::Im: return "I" + std::to_string(m);
        case KodairaKind::Imstar: return "I" + std::to_string(m) + "*";
        case KodairaKind::II: return "II";
        case KodairaKind::III: return "III";
        case KodairaKind::IV: return "IV";
        case KodairaKind::IVstar: return "IV*";
        case KodairaKind::IIIstar: return "III*";
        case KodairaKind::IIstar: return "II*";
    }
    return "?";
}

std::string KodairaType::dynkin() const {
    switch (kind) {
        case KodairaKind::I0: return "-";
        case KodairaKind::Im: return "A_" + std::to_string(m - 1) + "^(1)";
        case KodairaKind::Imstar: return "D_" + std::to_string(4 + m) + "^(1)";
        case KodairaKind::II: return "-";
        case KodairaKind::III: return "A_1^(1)";
        case KodairaKind::IV: return "A_2^(1)";
        case KodairaKind::IVstar: return "E_6^(1)";
        case KodairaKind::IIIstar: return "E_7^(1)";
        case KodairaKind::IIstar: return "E_8^(1)";
    }
    return "?";
}

KodairaType kodaira_from_name(const std::string& name) {
    if (name == "II") return {KodairaKind::II};
    if (name == "III") return {KodairaKind::III};
    if (name == "IV") return {KodairaKind::IV};
    if (name == "IV*") return {KodairaKind::IVstar};
    if (name == "III*") return {KodairaKind::IIIstar};
    if (name == "II*") return {KodairaKind::IIstar};
    if (name.size() >= 2 && name[0] == 'I') {
        bool star = name.back() == '*';
        std::string num = name.substr(1, name.size() - 1 - (star ? 1 : 0));
        long m = std::stol(num);
        if (star) return m == 0 ? KodairaType{KodairaKind::Imstar, 0} : KodairaType{KodairaKind::Imstar, m};
        return m == 0 ? KodairaType{KodairaKind::I0} : KodairaType{KodairaKind::Im, m};
    }
    throw Unclassifiable("unknown Kodaira name " + name);
}

nlohmann::json G1FiberReport::to_json() const {
    nlohmann::json j;
    j["system"] = system;
    j["ordDelta"] = ord_delta;
    if (ord_j == LONG_MIN)
        j["ordJ"] = "+inf";
    else
        j["ordJ"] = ord_j;
    j["kodaira"] = type.name();
    j["dynkin"] = type.dynkin();
    return j;
}

std::pair<MultiPoly, RationalFunction> delta_j(const WeierstrassG1& w) {
    MultiPoly delta = rat(4) * w.a.pow(3) + rat(27) * w.b.pow(2);
    if (delta.is_zero()) throw SingularFamily("discriminant vanishes identically");
    RationalFunction j(rat(4) * w.a.pow(3), delta);
    return {std::move(delta), std::move(j)};
}

KodairaType tate_classify(long ord_delta, long ord_j, bool ord_j_infinite) {
    if (ord_delta == 0) return {KodairaKind::I0};
    if (!ord_j_infinite && ord_j < 0) {
        long m = -ord_j;
        if (ord_delta == m) return {KodairaKind::Im, m};
        if (ord_delta == m + 6) return {KodairaKind::Imstar, m};
        throw Unclassifiable("(ordDelta, ordJ) = (" + std::to_string(ord_delta) + ", " +
                             std::to_string(ord_j) + ") matches no row");
    }
    switch (ord_delta) {
        case 2: return {KodairaKind::II};
        case 3: return {KodairaKind::III};
        case 4: return {KodairaKind::IV};
        case 6: return {KodairaKind::Imstar, 0};
        case 8: return {KodairaKind::IVstar};
        case 9: return {KodairaKind::IIIstar};
        case 10: return {KodairaKind::IIstar};
        default:
            throw Unclassifiable("ordDelta = " + std::to_string(ord_delta) +
                                 " with ordJ >= 0 matches no row");
    }
}

G1FiberReport classify_g1_at_infinity(const WeierstrassG1& w, const WitnessConfig& cfg) {
    InfinityModel m = infinity_model_g1(w);
    const auto& far = std::get<WeierstrassG1>(m.model);
    auto [delta, j] = delta_j(far);
    Place at0 = Place::finite(m.hbar, Rational(0));
    auto od = ord_at(delta, at0, cfg);
    auto oj = ord_at(j, at0, cfg);
    G1FiberReport rep;
    rep.ord_delta = od.value();  // delta nonzero by SingularFamily check
    rep.ord_j = oj ? *oj : LONG_MIN;
    rep.type = tate_classify(rep.ord_delta, oj ? *oj : 0, !oj.has_value());
    return rep;
}

}  // namespace painleve
