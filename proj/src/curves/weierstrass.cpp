#include "painleve/curves/weierstrass.hpp"

#include <algorithm>

#include "painleve/algebra/resultant.hpp"

namespace painleve {

namespace {

// common rational roots of a and b (only when both are univariate in h with
// rational coefficients); used to spot non-monomial twist factors l = h - c.
std::vector<Rational> common_rational_roots(const MultiPoly& a, const MultiPoly& b, Symbol h) {
    for (Symbol v : a.variables())
        if (v != h && a.uses(v)) return {};
    for (Symbol v : b.variables())
        if (v != h && b.uses(v)) return {};
    if (a.is_zero() || b.is_zero() || a.degree(h) <= 0 || b.degree(h) <= 0) return {};
    MultiPoly g = gcd_univariate(a, b, h);
    if (g.degree(h) <= 0) return {};
    // rational root scan of the integer-primitive gcd
    Rational c = g.content();
    if (c != 1) g = g * (Rational(1) / c);
    auto coeffs = g.coeffs_in(h);
    mpz_class a0 = coeffs.front().is_zero() ? mpz_class(0) : coeffs.front().constant_value().get_num();
    mpz_class an = coeffs.back().constant_value().get_num();
    std::vector<Rational> roots;
    if (a0 == 0) roots.push_back(Rational(0));
    auto divisors = [](mpz_class n) {
        std::vector<mpz_class> d;
        n = abs(n);
        for (mpz_class i = 1; i * i <= n; ++i)
            if (n % i == 0) {
                d.push_back(i);
                d.push_back(n / i);
            }
        return d;
    };
    if (a0 != 0) {
        for (const auto& pnum : divisors(a0))
            for (const auto& pden : divisors(an))
                for (int s : {1, -1}) {
                    Rational r(s * pnum, pden);
                    r.canonicalize();
                    std::map<Symbol, Rational> pt{{h, r}};
                    if (g.eval(pt) == 0 &&
                        std::find(roots.begin(), roots.end(), r) == roots.end())
                        roots.push_back(r);
                }
    }
    return roots;
}

long mult_at_root(const MultiPoly& p, Symbol h, const Rational& c) {
    if (p.is_zero()) return std::numeric_limits<long>::max();
    std::map<Symbol, MultiPoly> shift{{h, MultiPoly::variable(h) + MultiPoly::constant(c)}};
    return p.substitute_poly(shift).ord(h);
}

}  // namespace

WeierstrassG1 normalize_g1(MultiPoly a, MultiPoly b, Symbol fibration) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("normalize_g1: a and b both zero");
    const Symbol h = fibration;
    auto ord_or_max = [&](const MultiPoly& p) {
        return p.is_zero() ? std::numeric_limits<long>::max() : p.ord(h);
    };
    // monomial factor l = h
    while (ord_or_max(a) >= 4 && ord_or_max(b) >= 6) {
        if (!a.is_zero()) a = a.divide_by_power(h, 4);
        if (!b.is_zero()) b = b.divide_by_power(h, 6);
    }
    // linear factors l = h - c over purely rational coefficients
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rational& c : common_rational_roots(a, b, h)) {
            while (mult_at_root(a, h, c) >= 4 && mult_at_root(b, h, c) >= 6) {
                MultiPoly l = MultiPoly::variable(h) - MultiPoly::constant(c);
                if (!a.is_zero()) a = a.divide_exact_or_throw(l.pow(4));
                if (!b.is_zero()) b = b.divide_exact_or_throw(l.pow(6));
                changed = true;
            }
        }
    }
    return WeierstrassG1{std::move(a), std::move(b), fibration};
}

WeierstrassG2 normalize_g2(std::array<MultiPoly, 7> a, Symbol fibration) {
    const Symbol h = fibration;
    auto ok_after = [&](long k) {
        // every a_i must carry h^(i*k)
        for (int i = 1; i <= 6; ++i) {
            if (a[static_cast<size_t>(i)].is_zero()) continue;
            if (a[static_cast<size_t>(i)].ord(h) < i * k) return false;
        }
        return true;
    };
    while (ok_after(1)) {
        bool all_zero = true;
        for (int i = 1; i <= 6; ++i) all_zero = all_zero && a[static_cast<size_t>(i)].is_zero();
        if (all_zero) break;
        for (int i = 1; i <= 6; ++i)
            if (!a[static_cast<size_t>(i)].is_zero())
                a[static_cast<size_t>(i)] =
                    a[static_cast<size_t>(i)].divide_by_power(h, static_cast<std::uint32_t>(i));
    }
    if (a[0].is_zero() && a[1].is_zero())
        throw DegenerateSextic("leading coefficients a0 and a1 both vanish");
    return WeierstrassG2{std::move(a), fibration};
}

namespace {

Symbol bar_symbol(Symbol h) { return sym(sym_name(h) + "bar"); }

// p(h) -> p(1/hbar) * hbar^cap, polynomial in hbar (requires deg p <= cap)
MultiPoly to_bar(const MultiPoly& p, Symbol h, Symbol hbar, long cap) {
    if (p.is_zero()) return p;
    auto coeffs = p.coeffs_in(h);
    MultiPoly r;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        r = r + coeffs[k] * MultiPoly::monomial(hbar, static_cast<std::uint32_t>(cap - static_cast<long>(k)));
    }
    return r;
}

}  // namespace

InfinityModel infinity_model_g1(const WeierstrassG1& w) {
    const Symbol h = w.fibration, hbar = bar_symbol(h);
    long da = w.a.is_zero() ? 0 : w.a.degree(h);
    long db = w.b.is_zero() ? 0 : w.b.degree(h);
    long n = 1;
    while (da > 4 * n || db > 6 * n) ++n;
    MultiPoly abar = to_bar(w.a, h, hbar, 4 * n);
    MultiPoly bbar = to_bar(w.b, h, hbar, 6 * n);
    long k = 0;
    auto ord_or_max = [&](const MultiPoly& p) {
        return p.is_zero() ? std::numeric_limits<long>::max() : p.ord(hbar);
    };
    while (ord_or_max(abar) >= 4 && ord_or_max(bbar) >= 6) {
        if (!abar.is_zero()) abar = abar.divide_by_power(hbar, 4);
        if (!bbar.is_zero()) bbar = bbar.divide_by_power(hbar, 6);
        ++k;
    }
    InfinityModel m;
    m.model = WeierstrassG1{std::move(abar), std::move(bbar), hbar};
    m.hbar = hbar;
    m.n = n;
    m.exponent = n - k;
    m.gluing = "x = xbar*" + sym_name(h) + "^" + std::to_string(2 * m.exponent) + ", y = ybar*" +
               sym_name(h) + "^" + std::to_string(3 * m.exponent) + ", " + sym_name(hbar) + " = 1/" +
               sym_name(h);
    return m;
}

InfinityModel infinity_model_g2(const WeierstrassG2& w) {
    const Symbol h = w.fibration, hbar = bar_symbol(h);
    long n = 1;
    for (int i = 1; i <= 6; ++i) {
        const MultiPoly& ai = w.a[static_cast<size_t>(i)];
        if (ai.is_zero()) continue;
        long d = ai.degree(h);
        while (d > i * n) ++n;
    }
    std::array<MultiPoly, 7> abar;
    for (int i = 0; i <= 6; ++i)
        abar[static_cast<size_t>(i)] = to_bar(w.a[static_cast<size_t>(i)], h, hbar, i * n);
    long k = 0;
    auto can_divide = [&]() {
        for (int i = 1; i <= 6; ++i) {
            const MultiPoly& ai = abar[static_cast<size_t>(i)];
            if (ai.is_zero()) continue;
            if (ai.ord(hbar) < i) return false;
        }
        bool any = false;
        for (int i = 1; i <= 6; ++i) any = any || !abar[static_cast<size_t>(i)].is_zero();
        return any;
    };
    while (can_divide()) {
        for (int i = 1; i <= 6; ++i)
            if (!abar[static_cast<size_t>(i)].is_zero())
                abar[static_cast<size_t>(i)] =
                    abar[static_cast<size_t>(i)].divide_by_power(hbar, static_cast<std::uint32_t>(i));
        ++k;
    }
    if (abar[0].is_zero() && abar[1].is_zero())
        throw DegenerateSextic("infinity model lost both leading coefficients");
    InfinityModel m;
    m.model = WeierstrassG2{std::move(abar), hbar};
    m.hbar = hbar;
    m.n = n;
    m.exponent = n - k;
    m.gluing = "x = xbar*" + sym_name(h) + "^" + std::to_string(m.exponent) + ", y = ybar*" +
               sym_name(h) + "^" + std::to_string(3 * m.exponent) + ", " + sym_name(hbar) + " = 1/" +
               sym_name(h);
    return m;
}

namespace {

// substitutes hbar -> 1/h into p and clears with h^cap (cap >= deg_hbar p)
MultiPoly unbar(const MultiPoly& p, Symbol hbar, Symbol h, long cap) {
    return to_bar(p, hbar, h, cap);
}

}  // namespace

bool infinity_model_round_trips(const WeierstrassG1& w, const InfinityModel& m) {
    // ybar^2 = xbar^3 + abar xbar + bbar with xbar = x/h^(2e), ybar = y/h^(3e):
    // multiply by h^(6e): y^2 = x^3 + (abar(1/h) h^(4e)) x + bbar(1/h) h^(6e).
    const auto& g1 = std::get<WeierstrassG1>(m.model);
    long e = m.exponent;
    if (e < 0) return false;  // degenerate twists do not round-trip literally
    MultiPoly a_back = unbar(g1.a, m.hbar, w.fibration, 4 * e);
    MultiPoly b_back = unbar(g1.b, m.hbar, w.fibration, 6 * e);
    return a_back == w.a && b_back == w.b;
}

bool infinity_model_round_trips(const WeierstrassG2& w, const InfinityModel& m) {
    const auto& g2 = std::get<WeierstrassG2>(m.model);
    long e = m.exponent;
    if (e < 0) return false;
    for (int i = 0; i <= 6; ++i) {
        MultiPoly back = unbar(g2.a[static_cast<size_t>(i)], m.hbar, w.fibration, i * e);
        if (back != w.a[static_cast<size_t>(i)]) return false;
    }
    return true;
}

}  // namespace painleve
