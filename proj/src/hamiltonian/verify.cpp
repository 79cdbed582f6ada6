#include "painleve/hamiltonian/verify.hpp"

namespace painleve {

namespace {

std::size_t rank_at_point(const std::vector<std::vector<RationalFunction>>& jac,
                          const std::map<Symbol, Rational>& point) {
    // evaluate, then exact Gaussian elimination
    std::size_t rows = jac.size(), cols = jac[0].size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            auto v = jac[i][j].eval(point);
            if (!v) return SIZE_MAX;  // pole: point unusable
            m[i][j] = *v;
        }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["system"] = system;
    j["bracket_zero"] = bracket_zero;
    j["jacobian_rank"] = jacobian_rank;
    if (residual_zero) j["residual_zero"] = *residual_zero;
    j["witness_seed"] = witness_seed;
    j["pass"] = pass;
    return j;
}

VerificationReport verify_integrable(const RationalFunction& H, const RationalFunction& G,
                                     const PhaseSpace& space, const WitnessConfig& cfg,
                                     int witness_points) {
    VerificationReport rep;
    rep.witness_seed = cfg.seed;
    rep.bracket_zero = poisson_bracket(G, H, space).is_zero();

    std::vector<Symbol> coords;
    for (const auto& [q, p] : space.pairs) {
        coords.push_back(q);
        coords.push_back(p);
    }
    std::vector<std::vector<RationalFunction>> jac(2);
    for (Symbol v : coords) {
        jac[0].push_back(H.derivative(v));
        jac[1].push_back(G.derivative(v));
    }

    std::vector<Symbol> others;  // parameters, time and gauge get generic values too
    auto add_if_used = [&](Symbol s) {
        if (s != 0 && (H.uses(s) || G.uses(s))) others.push_back(s);
    };
    for (Symbol s : space.parameters) add_if_used(s);
    add_if_used(space.time);
    for (const auto& [u, flow] : space.gauge_flows) add_if_used(u);

    const std::size_t want = space.pairs.size();
    WitnessRng rng(cfg.seed);
    int good_points = 0;
    std::size_t min_rank = SIZE_MAX;
    for (int reseed = 0; reseed <= cfg.retries && good_points < witness_points; ++reseed) {
        for (int i = 0; good_points < witness_points && i < witness_points * (reseed + 2); ++i) {
            std::map<Symbol, Rational> point;
            for (Symbol v : coords) point[v] = rng.small_rational(cfg.height);
            for (Symbol v : others) point[v] = rng.small_rational(cfg.height);
            std::size_t r = rank_at_point(jac, point);
            if (r == SIZE_MAX) continue;  // witness hit a pole, redraw
            ++good_points;
            min_rank = std::min(min_rank, r);
        }
    }
    if (good_points < witness_points)
        throw WitnessDegeneracy("could not draw enough witness points off the polar locus");
    rep.jacobian_rank = (min_rank == SIZE_MAX) ? 0 : min_rank;
    rep.pass = rep.bracket_zero && rep.jacobian_rank == want;
    return rep;
}

}  // namespace painleve
