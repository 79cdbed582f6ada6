#include "painleve/algebra/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "painleve/algebra/rational_function.hpp"

namespace painleve {

namespace {

// Graded lex, smaller symbol id more significant. Returns <0, 0, >0.
int cmp_exps(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    long da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0) terms_.push_back(Term{{}, c});
}

MultiPoly MultiPoly::constant(const Rational& c) { return MultiPoly(c); }

MultiPoly MultiPoly::variable(Symbol s) { return monomial(s, 1); }

MultiPoly MultiPoly::monomial(Symbol s, std::uint32_t power, const Rational& c) {
    MultiPoly p;
    if (c == 0) return p;
    if (power == 0) return MultiPoly(c);
    p.vars_ = {s};
    p.terms_.push_back(Term{{power}, c});
    return p;
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_[0].coeff;
}

long MultiPoly::degree(Symbol s) const {
    if (terms_.empty()) return -1;
    auto it = std::find(vars_.begin(), vars_.end(), s);
    if (it == vars_.end()) return 0;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    long d = 0;
    for (const auto& t : terms_) d = std::max<long>(d, t.exps[idx]);
    return d;
}

long MultiPoly::ord(Symbol s) const {
    if (terms_.empty()) return -1;
    auto it = std::find(vars_.begin(), vars_.end(), s);
    if (it == vars_.end()) return 0;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    long d = terms_[0].exps[idx];
    for (const auto& t : terms_) d = std::min<long>(d, t.exps[idx]);
    return d;
}

long MultiPoly::total_degree() const {
    long d = -1;
    for (const auto& t : terms_) {
        long s = 0;
        for (auto e : t.exps) s += e;
        d = std::max(d, s);
    }
    return d;
}

bool MultiPoly::uses(Symbol s) const {
    auto it = std::find(vars_.begin(), vars_.end(), s);
    if (it == vars_.end()) return false;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    for (const auto& t : terms_)
        if (t.exps[idx] > 0) return true;
    return false;
}

void MultiPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return cmp_exps(a.exps, b.exps) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && cmp_exps(out.back().exps, t.exps) == 0)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
    *this = drop_unused();
}

MultiPoly MultiPoly::drop_unused() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& t : terms_)
        for (size_t i = 0; i < t.exps.size(); ++i)
            if (t.exps[i] > 0) used[i] = true;
    bool all = true;
    for (bool b : used) all = all && b;
    if (all) return *this;
    MultiPoly r;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) r.vars_.push_back(vars_[i]);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term nt;
        nt.coeff = t.coeff;
        nt.exps.reserve(r.vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) nt.exps.push_back(t.exps[i]);
        r.terms_.push_back(std::move(nt));
    }
    return r;
}

MultiPoly MultiPoly::remap(const std::vector<Symbol>& universe) const {
    MultiPoly r;
    r.vars_ = universe;
    std::vector<size_t> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(universe.begin(), universe.end(), vars_[i]);
        pos[i] = static_cast<size_t>(it - universe.begin());
    }
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term nt;
        nt.coeff = t.coeff;
        nt.exps.assign(universe.size(), 0);
        for (size_t i = 0; i < vars_.size(); ++i) nt.exps[pos[i]] = t.exps[i];
        r.terms_.push_back(std::move(nt));
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return cmp_exps(a.exps, b.exps) > 0; });
    return r;
}

void MultiPoly::align(const MultiPoly& a, const MultiPoly& b, MultiPoly& a2, MultiPoly& b2) {
    std::vector<Symbol> u;
    u.reserve(a.vars_.size() + b.vars_.size());
    std::merge(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(), std::back_inserter(u));
    u.erase(std::unique(u.begin(), u.end()), u.end());
    a2 = (u == a.vars_) ? a : a.remap(u);
    b2 = (u == b.vars_) ? b : b.remap(u);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly a, b;
    align(*this, o, a, b);
    MultiPoly r;
    r.vars_ = a.vars_;
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() ||
            (i < a.terms_.size() && cmp_exps(a.terms_[i].exps, b.terms_[j].exps) > 0)) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size() || cmp_exps(a.terms_[i].exps, b.terms_[j].exps) < 0) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            Term t = a.terms_[i++];
            t.coeff += b.terms_[j++].coeff;
            if (t.coeff != 0) r.terms_.push_back(std::move(t));
        }
    }
    return r.drop_unused();
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (is_zero() || o.is_zero()) return MultiPoly();
    MultiPoly a, b;
    align(*this, o, a, b);
    std::map<std::vector<std::uint32_t>, Rational> acc;
    std::vector<std::uint32_t> e(a.vars_.size());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            for (size_t k = 0; k < e.size(); ++k) e[k] = ta.exps[k] + tb.exps[k];
            auto [it, inserted] = acc.try_emplace(e, Rational(0));
            it->second += ta.coeff * tb.coeff;
        }
    }
    MultiPoly r;
    r.vars_ = a.vars_;
    r.terms_.reserve(acc.size());
    for (auto& [exps, c] : acc)
        if (c != 0) r.terms_.push_back(Term{exps, c});
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return cmp_exps(x.exps, y.exps) > 0; });
    return r.drop_unused();
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    if (c == 0) return MultiPoly();
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

MultiPoly MultiPoly::pow(std::uint32_t k) const {
    MultiPoly r = MultiPoly::constant(Rational(1));
    MultiPoly base = *this;
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    MultiPoly a, b;
    align(*this, o, a, b);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

MultiPoly MultiPoly::derivative(Symbol s) const {
    auto it = std::find(vars_.begin(), vars_.end(), s);
    if (it == vars_.end()) return MultiPoly();
    size_t idx = static_cast<size_t>(it - vars_.begin());
    MultiPoly r;
    r.vars_ = vars_;
    for (const auto& t : terms_) {
        if (t.exps[idx] == 0) continue;
        Term nt = t;
        nt.coeff *= Rational(static_cast<long>(t.exps[idx]));
        nt.exps[idx] -= 1;
        r.terms_.push_back(std::move(nt));
    }
    r.normalize();
    return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(Symbol s) const {
    long d = degree(s);
    std::vector<MultiPoly> out(static_cast<size_t>(std::max<long>(d, 0)) + 1);
    auto it = std::find(vars_.begin(), vars_.end(), s);
    if (it == vars_.end()) {
        out[0] = *this;
        return out;
    }
    size_t idx = static_cast<size_t>(it - vars_.begin());
    for (const auto& t : terms_) {
        std::uint32_t k = t.exps[idx];
        MultiPoly& dst = out[k];
        if (dst.vars_.empty() && dst.terms_.empty()) dst.vars_ = vars_;
        if (dst.vars_ != vars_) dst = dst.remap(vars_);
        Term nt = t;
        nt.exps[idx] = 0;
        dst.terms_.push_back(std::move(nt));
    }
    for (auto& c : out) c.normalize();
    return out;
}

MultiPoly MultiPoly::from_coeffs(Symbol s, const std::vector<MultiPoly>& coeffs) {
    MultiPoly r;
    MultiPoly x = MultiPoly::variable(s);
    for (size_t k = coeffs.size(); k-- > 0;) r = r * x + coeffs[k];
    return r;
}

MultiPoly MultiPoly::coeff_of(Symbol s, std::uint32_t k) const {
    auto cs = coeffs_in(s);
    if (k >= cs.size()) return MultiPoly();
    return cs[k];
}

MultiPoly MultiPoly::leading_coeff_in(Symbol s) const {
    long d = degree(s);
    if (d < 0) return MultiPoly();
    return coeff_of(s, static_cast<std::uint32_t>(d));
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& o) const {
    if (o.is_zero()) throw DivisionByZeroPoly();
    if (is_zero()) return MultiPoly();
    if (o.is_constant()) return *this * (Rational(1) / o.constant_value());
    MultiPoly rem = *this;
    MultiPoly q;
    while (!rem.is_zero()) {
        MultiPoly a, b;
        align(rem, o, a, b);
        const Term& lr = a.terms_[0];
        const Term& lb = b.terms_[0];
        Term t;
        t.exps.resize(lr.exps.size());
        bool divides = true;
        for (size_t i = 0; divides && i < lr.exps.size(); ++i) {
            if (lr.exps[i] < lb.exps[i]) divides = false;
            else t.exps[i] = lr.exps[i] - lb.exps[i];
        }
        if (!divides) return std::nullopt;
        t.coeff = lr.coeff / lb.coeff;
        MultiPoly mono;
        mono.vars_ = a.vars_;
        mono.terms_.push_back(t);
        mono = mono.drop_unused();
        q = q + mono;
        rem = a - mono * b;
    }
    return q;
}

MultiPoly MultiPoly::divide_exact_or_throw(const MultiPoly& o) const {
    auto q = divide_exact(o);
    if (!q) throw std::logic_error("inexact polynomial division");
    return *q;
}

MultiPoly MultiPoly::divide_by_power(Symbol s, std::uint32_t k) const {
    if (k == 0 || is_zero()) return *this;
    auto it = std::find(vars_.begin(), vars_.end(), s);
    if (it == vars_.end()) throw std::logic_error("divide_by_power: variable absent");
    size_t idx = static_cast<size_t>(it - vars_.begin());
    MultiPoly r = *this;
    for (auto& t : r.terms_) {
        if (t.exps[idx] < k) throw std::logic_error("divide_by_power: not divisible");
        t.exps[idx] -= k;
    }
    return r.drop_unused();
}

RationalFunction MultiPoly::substitute(const std::map<Symbol, RationalFunction>& bindings) const {
    Symbol v = 0;
    bool found = false;
    for (Symbol s : vars_) {
        if (bindings.count(s) && uses(s)) {
            v = s;
            found = true;
            break;
        }
    }
    if (!found) return RationalFunction(*this);
    auto cs = coeffs_in(v);
    const RationalFunction& x = bindings.at(v);
    RationalFunction acc;
    for (size_t k = cs.size(); k-- > 0;) acc = acc * x + cs[k].substitute(bindings);
    return acc;
}

MultiPoly MultiPoly::substitute_poly(const std::map<Symbol, MultiPoly>& bindings) const {
    Symbol v = 0;
    bool found = false;
    for (Symbol s : vars_) {
        if (bindings.count(s) && uses(s)) {
            v = s;
            found = true;
            break;
        }
    }
    if (!found) return *this;
    auto cs = coeffs_in(v);
    const MultiPoly& x = bindings.at(v);
    MultiPoly acc;
    for (size_t k = cs.size(); k-- > 0;) acc = acc * x + cs[k].substitute_poly(bindings);
    return acc;
}

Rational MultiPoly::eval(const std::map<Symbol, Rational>& point) const {
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (t.exps[i] == 0) continue;
            auto it = point.find(vars_[i]);
            if (it == point.end())
                throw std::logic_error("eval: unbound variable " + sym_name(vars_[i]));
            Rational b = it->second;
            for (std::uint32_t k = 0; k < t.exps[i]; ++k) v *= b;
        }
        acc += v;
    }
    return acc;
}

const Rational& MultiPoly::leading_rational() const {
    static const Rational zero(0);
    if (terms_.empty()) return zero;
    return terms_[0].coeff;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(1);
    mpz_class g(0), l(1);
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rational c(g, l);
    c.canonicalize();
    if (sgn(terms_[0].coeff) < 0) c = -c;
    return c;
}

nlohmann::json MultiPoly::to_json() const {
    nlohmann::json j;
    j["variables"] = nlohmann::json::array();
    for (Symbol s : vars_) j["variables"].push_back(sym_name(s));
    j["terms"] = nlohmann::json::array();
    for (const auto& t : terms_) {
        nlohmann::json jt;
        jt["exps"] = t.exps;
        jt["coeff"] = rat_to_string(t.coeff);
        j["terms"].push_back(jt);
    }
    return j;
}

MultiPoly MultiPoly::from_json(const nlohmann::json& j) {
    MultiPoly p;
    for (const auto& v : j.at("variables")) p.vars_.push_back(sym(v.get<std::string>()));
    for (const auto& jt : j.at("terms")) {
        Term t;
        t.exps = jt.at("exps").get<std::vector<std::uint32_t>>();
        if (t.exps.size() != p.vars_.size())
            throw std::invalid_argument("polynomial term arity mismatch");
        t.coeff = rat_from_string(jt.at("coeff").get<std::string>());
        p.terms_.push_back(std::move(t));
    }
    // incoming variable lists may be unsorted relative to interning order
    std::vector<Symbol> sorted = p.vars_;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != p.vars_.size()) throw std::invalid_argument("duplicate variable");
    p = p.remap(sorted);
    p.normalize();
    return p;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        bool has_vars = false;
        for (auto e : t.exps) has_vars = has_vars || e > 0;
        if (!has_vars || c != 1) {
            os << rat_to_string(c);
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (t.exps[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << sym_name(vars_[i]);
            if (t.exps[i] > 1) os << "^" << t.exps[i];
        }
    }
    return os.str();
}

}  // namespace painleve
