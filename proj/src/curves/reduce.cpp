#include "painleve/curves/reduce.hpp"

#include <algorithm>

#include "painleve/algebra/resultant.hpp"

namespace painleve {

namespace {

// strip x^(2k) square monomial factors: y^2 = f = x^(2k) g  ->  (y/x^k)^2 = g
MultiPoly strip_square_monomial(MultiPoly f, Symbol x) {
    long o = f.ord(x);
    long k = o / 2;
    if (k > 0) f = f.divide_by_power(x, static_cast<std::uint32_t>(2 * k));
    return f;
}

// quartic invariants: I = 12ae - 3bd + c^2,
// J = 72ace + 9bcd - 27ad^2 - 27eb^2 - 2c^3.  The Jacobian of y^2 = quartic
// is Y^2 = X^3 - 27 I X - 27 J (an allowed constant rescaling of the classical
// model; only valuations of Delta and j feed the classification).
void quartic_to_cubic(const MultiPoly& f, Symbol x, MultiPoly& A, MultiPoly& B) {
    auto cs = f.coeffs_in(x);
    cs.resize(5);
    const MultiPoly &e = cs[0], &d = cs[1], &c = cs[2], &b = cs[3], &a = cs[4];
    MultiPoly I = rat(12) * a * e - rat(3) * b * d + c * c;
    MultiPoly J = rat(72) * a * c * e + rat(9) * b * c * d - rat(27) * a * d * d -
                  rat(27) * e * b * b - rat(2) * c.pow(3);
    A = rat(-27) * I;
    B = rat(-27) * J;
}

// y^2 = c3 x^3 + c2 x^2 + c1 x + c0 -> short form via X = c3 x + c2/3 shift
void cubic_to_short(const MultiPoly& f, Symbol x, MultiPoly& A, MultiPoly& B) {
    auto cs = f.coeffs_in(x);
    cs.resize(4);
    const MultiPoly &c0 = cs[0], &c1 = cs[1], &c2 = cs[2], &c3 = cs[3];
    // multiply by c3^2, X = c3 x: Y^2 = X^3 + c2 X^2 + c1 c3 X + c0 c3^2
    MultiPoly b2 = c2, b1 = c1 * c3, b0 = c0 * c3 * c3;
    // depress X -> X - b2/3
    A = b1 - rat(1, 3) * b2 * b2;
    B = b0 - rat(1, 3) * b1 * b2 + rat(2, 27) * b2.pow(3);
}

Reduction finish_even_model(MultiPoly f, Symbol x, Symbol fib, BirationalRecord rec) {
    f = strip_square_monomial(std::move(f), x);
    long d = f.degree(x);
    if (d < 3) throw GenusDrop("reduced right-hand side has degree " + std::to_string(d));
    if (d > 6) throw UnsupportedShape("right-hand side degree " + std::to_string(d) + " exceeds 6");
    MultiPoly disc = discriminant_poly(f, x);
    if (disc.is_zero()) throw GenusDrop("right-hand side is not squarefree for generic fibre");
    Reduction out;
    out.record = std::move(rec);
    if (d <= 4) {
        MultiPoly A, B;
        if (d == 4)
            quartic_to_cubic(f, x, A, B);
        else
            cubic_to_short(f, x, A, B);
        out.model = normalize_g1(std::move(A), std::move(B), fib);
    } else {
        std::array<MultiPoly, 7> a;
        auto cs = f.coeffs_in(x);
        cs.resize(7);
        for (int i = 0; i <= 6; ++i) a[static_cast<size_t>(i)] = cs[static_cast<size_t>(6 - i)];
        out.model = normalize_g2(std::move(a), fib);
    }
    return out;
}

}  // namespace

Reduction reduce_to_weierstrass(const SpectralCurve& c, bool plus_branch) {
    const Symbol x = c.x, y = c.y;
    long dy = c.poly.degree(y);
    auto ycoeffs = c.poly.coeffs_in(y);

    if (dy == 2) {
        MultiPoly a = ycoeffs[2], b = ycoeffs.size() > 1 ? ycoeffs[1] : MultiPoly(),
                  cc = ycoeffs[0];
        // monicize (Y = a y), complete the square: (Y + b/2)^2 = b^2/4 - a c
        MultiPoly f = rat(1, 4) * b * b - a * cc;
        BirationalRecord rec;
        rec.description = b.is_zero() && a.is_constant()
                              ? "direct even model"
                              : "Y = a(x) y + b(x)/2; Y^2 = b^2/4 - a c";
        // certificate: substituting y = (Y - b/2)/a back annihilates the curve;
        // equivalently a*(curve) == (a y + b/2)^2 - f, checked exactly.
        MultiPoly lhs = a * c.poly;
        MultiPoly yv = MultiPoly::variable(y);
        MultiPoly sq = (a * yv + rat(1, 2) * b).pow(2) - f;
        rec.verified = (lhs == sq);
        return finish_even_model(std::move(f), x, c.fibration, std::move(rec));
    }

    if (dy == 4) {
        // expect y^4 - P(x) y^2 + Q(x), monic and even in y
        bool even = true;
        if (ycoeffs.size() > 3 && !ycoeffs[3].is_zero()) even = false;
        if (ycoeffs.size() > 1 && !ycoeffs[1].is_zero()) even = false;
        if (!even || !ycoeffs[4].is_constant())
            throw UnsupportedShape("quartic in y must be monic biquadratic");
        Rational lead = ycoeffs[4].constant_value();
        MultiPoly P = (rat(-1) / lead) * ycoeffs[2];
        MultiPoly Q = (rat(1) / lead) * ycoeffs[0];
        MultiPoly R = P * P - rat(4) * Q;
        if (R.degree(x) != 1)
            throw UnsupportedShape("radicand P^2-4Q has x-degree " +
                                   std::to_string(R.degree(x)) + "; only the linear case is built");
        MultiPoly alpha = R.coeff_of(x, 1), beta = R.coeff_of(x, 0);
        if (alpha.is_zero()) throw UnsupportedShape("degenerate linear radicand");
        Symbol u = sym("u");
        // x = (u^2 - beta)/alpha; y^2 = (P(x(u)) +/- u)/2, cleared by 2 alpha^degP
        MultiPoly u2 = MultiPoly::variable(u) * MultiPoly::variable(u);
        long dp = std::max<long>(P.degree(x), 0);
        auto pc = P.coeffs_in(x);
        MultiPoly N;  // alpha^dp * P(x(u))
        for (size_t k = 0; k < pc.size(); ++k) {
            MultiPoly term = pc[k] * (u2 - beta).pow(static_cast<std::uint32_t>(k)) *
                             alpha.pow(static_cast<std::uint32_t>(dp - static_cast<long>(k)));
            N = N + term;
        }
        MultiPoly ualpha = MultiPoly::variable(u) * alpha.pow(static_cast<std::uint32_t>(dp));
        MultiPoly f = rat(2) * (plus_branch ? N + ualpha : N - ualpha);
        BirationalRecord rec;
        rec.description = "w = 2y^2 - P; x = (u^2 - beta)/alpha, y^2 = (P(x(u)) " +
                          std::string(plus_branch ? "+" : "-") + " u)/2";
        // certificate: with ysq := (P(x(u)) +/- u)/2 and x := x(u),
        // ysq^2 - P(x(u)) ysq + Q(x(u)) == (u^2 - R(x(u)))/4 == 0 exactly.
        {
            RationalFunction xa(u2 - beta, alpha);
            std::map<Symbol, RationalFunction> bx{{x, xa}};
            RationalFunction Pu = P.substitute(bx);
            RationalFunction Qu = Q.substitute(bx);
            RationalFunction uu = RationalFunction::variable(u);
            RationalFunction ysq = (plus_branch ? Pu + uu : Pu - uu) * RationalFunction(rat(1, 2));
            RationalFunction residue = ysq * ysq - Pu * ysq + Qu;
            rec.verified = residue.is_zero();
        }
        Reduction out = finish_even_model(std::move(f), u, c.fibration, std::move(rec));
        out.radicand = R;
        return out;
    }

    throw UnsupportedShape("unsupported y-degree pattern " + std::to_string(dy));
}

SpectralCurve level_set_curve(const RationalFunction& H, Symbol q, Symbol p, Symbol h) {
    RationalFunction eq = H - RationalFunction::variable(h);
    SpectralCurve c;
    c.poly = eq.num();
    // positive leading coefficient in p for a stable presentation
    if (sgn(c.poly.leading_coeff_in(p).leading_rational()) < 0) c.poly = -c.poly;
    c.x = q;
    c.y = p;
    c.fibration = h;
    return c;
}

}  // namespace painleve
