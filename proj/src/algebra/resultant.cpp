#include "painleve/algebra/resultant.hpp"

#include <algorithm>

namespace painleve {

namespace {

// dense view in var; coefficients free of var
struct Dense {
    std::vector<MultiPoly> c;  // c[k] multiplies var^k
    long deg() const {
        for (size_t k = c.size(); k-- > 0;)
            if (!c[k].is_zero()) return static_cast<long>(k);
        return -1;
    }
    const MultiPoly& lc() const { return c[static_cast<size_t>(deg())]; }
    bool zero() const { return deg() < 0; }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

Dense dense_of(const MultiPoly& p, Symbol var) {
    Dense d;
    d.c = p.coeffs_in(var);
    d.trim();
    return d;
}

MultiPoly undense(const Dense& d, Symbol var) { return MultiPoly::from_coeffs(var, d.c); }

Dense scale(const Dense& a, const MultiPoly& f) {
    Dense r = a;
    for (auto& x : r.c) x = x * f;
    r.trim();
    return r;
}

Dense sub(const Dense& a, const Dense& b) {
    Dense r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t k = 0; k < r.c.size(); ++k) {
        if (k < a.c.size()) r.c[k] = a.c[k];
        if (k < b.c.size()) r.c[k] = r.c[k] - b.c[k];
    }
    r.trim();
    return r;
}

// b shifted up by s powers of var, scaled by f
Dense shift_scale(const Dense& b, size_t s, const MultiPoly& f) {
    Dense r;
    r.c.assign(b.c.size() + s, MultiPoly());
    for (size_t k = 0; k < b.c.size(); ++k) r.c[k + s] = b.c[k] * f;
    r.trim();
    return r;
}

Dense dense_prem(const Dense& a, const Dense& b) {
    long da = a.deg(), db = b.deg();
    Dense r = a;
    long e = da - db + 1;
    while (!r.zero() && r.deg() >= db) {
        long dr = r.deg();
        MultiPoly t = r.lc();
        r = sub(scale(r, b.lc()), shift_scale(b, static_cast<size_t>(dr - db), t));
        --e;
    }
    if (e > 0) {
        MultiPoly f = b.lc().pow(static_cast<std::uint32_t>(e));
        r = scale(r, f);
    }
    return r;
}

Dense dense_exact_div(const Dense& a, const MultiPoly& f) {
    Dense r = a;
    for (auto& x : r.c) x = x.divide_exact_or_throw(f);
    return r;
}

}  // namespace

MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, Symbol var) {
    Dense da = dense_of(a, var), db = dense_of(b, var);
    if (db.zero()) throw DivisionByZeroPoly();
    if (da.deg() < db.deg()) {
        return a;
    }
    return undense(dense_prem(da, db), var);
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Symbol var) {
    if (p.degree(var) <= 0 || q.degree(var) <= 0)
        throw DegreeZero("resultant: inputs must have positive degree in " + sym_name(var));
    Dense A = dense_of(p, var), B = dense_of(q, var);
    int s = 1;
    if (A.deg() < B.deg()) {
        if ((A.deg() * B.deg()) % 2 == 1) s = -s;
        std::swap(A, B);
    }
    MultiPoly g = MultiPoly::constant(Rational(1));
    MultiPoly h = MultiPoly::constant(Rational(1));
    while (true) {
        long da = A.deg(), db = B.deg();
        long delta = da - db;
        if ((da % 2 == 1) && (db % 2 == 1)) s = -s;
        Dense R = dense_prem(A, B);
        A = B;
        if (R.zero()) return MultiPoly();  // positive-degree common factor
        MultiPoly divisor = g * h.pow(static_cast<std::uint32_t>(delta));
        B = dense_exact_div(R, divisor);
        g = A.lc();
        if (delta > 0) {
            MultiPoly gp = g.pow(static_cast<std::uint32_t>(delta));
            h = (delta == 1) ? gp
                             : gp.divide_exact_or_throw(h.pow(static_cast<std::uint32_t>(delta - 1)));
        }
        if (B.deg() <= 0) break;
    }
    long dA = A.deg();
    MultiPoly lcB = B.lc();
    MultiPoly res = lcB.pow(static_cast<std::uint32_t>(dA));
    if (dA > 1) res = res.divide_exact_or_throw(h.pow(static_cast<std::uint32_t>(dA - 1)));
    if (s < 0) res = -res;
    return res;
}

MultiPoly resultant_sylvester(const MultiPoly& p, const MultiPoly& q, Symbol var) {
    long m = p.degree(var), n = q.degree(var);
    if (m <= 0 || n <= 0) throw DegreeZero("resultant_sylvester: constant input");
    auto pc = p.coeffs_in(var), qc = q.coeffs_in(var);
    size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<MultiPoly>> M(size, std::vector<MultiPoly>(size));
    for (long r = 0; r < n; ++r)
        for (long k = 0; k <= m; ++k)
            M[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = pc[static_cast<size_t>(m - k)];
    for (long r = 0; r < m; ++r)
        for (long k = 0; k <= n; ++k)
            M[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] = qc[static_cast<size_t>(n - k)];
    return bareiss_determinant(std::move(M));
}

MultiPoly discriminant_poly(const MultiPoly& p, Symbol var) {
    long n = p.degree(var);
    if (n < 2) throw DegreeZero("discriminant requires degree >= 2");
    MultiPoly d = p.derivative(var);
    MultiPoly res = resultant(p, d, var);
    MultiPoly lc = p.leading_coeff_in(var);
    MultiPoly out = res.divide_exact_or_throw(lc);
    if ((n * (n - 1) / 2) % 2 == 1) out = -out;
    return out;
}

MultiPoly gcd_univariate(const MultiPoly& p, const MultiPoly& q, Symbol var) {
    auto normalize = [&](MultiPoly g) {
        if (g.is_zero()) return g;
        // strip polynomial monomial content in the spectator variables
        for (Symbol v : std::vector<Symbol>(g.variables())) {
            if (v == var) continue;
            long m = g.ord(v);
            if (m > 0) g = g.divide_by_power(v, static_cast<std::uint32_t>(m));
        }
        Rational c = g.content();
        if (c != 1) g = g * (Rational(1) / c);
        return g;
    };
    if (p.is_zero()) return normalize(q);
    if (q.is_zero()) return normalize(p);
    Dense A = dense_of(p, var), B = dense_of(q, var);
    if (A.deg() < B.deg()) std::swap(A, B);
    if (B.deg() < 0) return MultiPoly::constant(Rational(1));
    while (true) {
        if (B.deg() == 0) return MultiPoly::constant(Rational(1));
        Dense R = dense_prem(A, B);
        if (R.zero()) break;
        A = B;
        B = R;
        // keep coefficients small: strip numeric content each round
        MultiPoly bb = undense(B, var);
        Rational c = bb.content();
        if (c != 1 && c != 0) B = dense_of(bb * (Rational(1) / c), var);
    }
    return normalize(undense(B, var));
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
    const size_t n = m.size();
    if (n == 0) return MultiPoly::constant(Rational(1));
    for (const auto& row : m)
        if (row.size() != n) throw std::logic_error("bareiss: non-square matrix");
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(Rational(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MultiPoly();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MultiPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = t.divide_exact_or_throw(prev);
            }
            m[i][k] = MultiPoly();
        }
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

}  // namespace painleve
