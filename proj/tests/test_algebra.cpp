#include <doctest.h>

#include "painleve/algebra/multipoly.hpp"
#include "painleve/algebra/places.hpp"
#include "painleve/algebra/rational_function.hpp"
#include "painleve/algebra/resultant.hpp"

using namespace painleve;

namespace {

MultiPoly random_poly(WitnessRng& rng, const std::vector<Symbol>& vars, int max_deg, int terms) {
    MultiPoly p;
    for (int t = 0; t < terms; ++t) {
        MultiPoly mono = MultiPoly::constant(rng.small_rational(9));
        for (Symbol v : vars) {
            auto e = static_cast<std::uint32_t>(rng.next_u64() % (max_deg + 1));
            mono = mono * MultiPoly::monomial(v, e);
        }
        p = p + mono;
    }
    return p;
}

MultiPoly P(Symbol s) { return MultiPoly::variable(s); }

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    Symbol x = sym("x"), y = sym("y");
    CHECK((P(x) + MultiPoly::constant(rat(1))) + (P(x) - MultiPoly::constant(rat(1))) ==
          MultiPoly::monomial(x, 1, rat(2)));
    CHECK((P(x) + P(y)) * (P(x) - P(y)) == P(x) * P(x) - P(y) * P(y));

    WitnessRng rng(1);
    for (int i = 0; i < 10; ++i) {
        MultiPoly p = random_poly(rng, {x, y}, 3, 4);
        CHECK((MultiPoly() * p).is_zero());
    }
}

TEST_CASE("ring axioms on random triples") {
    Symbol x = sym("x"), y = sym("y"), z = sym("z");
    WitnessRng rng(2);
    for (int i = 0; i < 25; ++i) {
        MultiPoly a = random_poly(rng, {x, y, z}, 2, 3);
        MultiPoly b = random_poly(rng, {x, y, z}, 2, 3);
        MultiPoly c = random_poly(rng, {x, y, z}, 2, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("exact division") {
    Symbol x = sym("x"), y = sym("y");
    WitnessRng rng(3);
    for (int i = 0; i < 20; ++i) {
        MultiPoly a = random_poly(rng, {x, y}, 3, 3);
        MultiPoly b = random_poly(rng, {x, y}, 2, 3);
        if (b.is_zero()) continue;
        MultiPoly prod = a * b;
        auto q = prod.divide_exact(b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    MultiPoly nondiv = P(x) * P(x) + MultiPoly::constant(rat(1));
    CHECK(!nondiv.divide_exact(P(x) + MultiPoly::constant(rat(1))).has_value());
}

TEST_CASE("resultant examples") {
    Symbol x = sym("x"), a = sym("a"), b = sym("b"), c = sym("c");
    CHECK(resultant(P(x) - P(a), P(x) - P(b), x) == P(a) - P(b));
    MultiPoly f = P(x) * P(x) - MultiPoly::constant(rat(2));
    CHECK(resultant(f, f, x).is_zero());
    // res_x(x^2+bx+c, 2x+b) = 4c - b^2
    MultiPoly g = P(x) * P(x) + P(b) * P(x) + P(c);
    MultiPoly h = MultiPoly::monomial(x, 1, rat(2)) + P(b);
    CHECK(resultant(g, h, x) == MultiPoly::monomial(sym("c"), 1, rat(4)) - P(b) * P(b));
    CHECK_THROWS_AS(resultant(g, MultiPoly::constant(rat(5)), x), DegreeZero);
}

TEST_CASE("subresultant PRS equals Sylvester determinant") {
    Symbol x = sym("x"), a = sym("a");
    WitnessRng rng(4);
    int checked = 0;
    for (int i = 0; i < 60 && checked < 30; ++i) {
        MultiPoly p = random_poly(rng, {x, a}, 3, 3);
        MultiPoly q = random_poly(rng, {x, a}, 3, 3);
        if (p.degree(x) <= 0 || q.degree(x) <= 0) continue;
        ++checked;
        CHECK(resultant(p, q, x) == resultant_sylvester(p, q, x));
    }
    CHECK(checked >= 20);
}

TEST_CASE("resultant multiplicativity") {
    Symbol x = sym("x"), a = sym("a");
    WitnessRng rng(5);
    int checked = 0;
    for (int i = 0; i < 60 && checked < 15; ++i) {
        MultiPoly p = random_poly(rng, {x, a}, 2, 2);
        MultiPoly q = random_poly(rng, {x, a}, 2, 2);
        MultiPoly r = random_poly(rng, {x, a}, 2, 2);
        if (p.degree(x) <= 0 || q.degree(x) <= 0 || r.degree(x) <= 0) continue;
        ++checked;
        CHECK(resultant(p * q, r, x) == resultant(p, r, x) * resultant(q, r, x));
    }
    CHECK(checked >= 10);
}

TEST_CASE("discriminant") {
    Symbol x = sym("x"), a = sym("a"), b = sym("b");
    MultiPoly cubic = P(x).pow(3) + P(a) * P(x) + P(b);
    MultiPoly expected = MultiPoly::monomial(sym("a"), 1, rat(-4)).pow(1) * P(a) * P(a) -
                         MultiPoly::constant(rat(27)) * P(b) * P(b);
    CHECK(discriminant_poly(cubic, x) ==
          MultiPoly::constant(rat(-4)) * P(a).pow(3) - MultiPoly::constant(rat(27)) * P(b).pow(2));
    MultiPoly sq = (P(x) - MultiPoly::constant(rat(1))) * (P(x) - MultiPoly::constant(rat(1)));
    CHECK(discriminant_poly(sq, x).is_zero());
    MultiPoly quad = P(x) * P(x) + MultiPoly::constant(rat(1));
    CHECK(discriminant_poly(quad, x) == MultiPoly::constant(rat(-4)));
}

TEST_CASE("discriminant vanishes iff gcd(p,p') nonconstant") {
    Symbol x = sym("x");
    WitnessRng rng(6);
    int tried = 0;
    for (int i = 0; i < 200 && tried < 100; ++i) {
        MultiPoly p = random_poly(rng, {x}, 6, 4);
        if (p.degree(x) < 2) continue;
        ++tried;
        // force some repeated roots now and then
        if (i % 5 == 0) {
            MultiPoly lin = P(x) - MultiPoly::constant(rng.small_rational(5));
            p = lin * lin * random_poly(rng, {x}, 2, 2);
            if (p.degree(x) < 2) continue;
        }
        bool disc_zero = discriminant_poly(p, x).is_zero();
        bool gcd_nonconst = gcd_univariate(p, p.derivative(x), x).degree(x) > 0;
        CHECK(disc_zero == gcd_nonconst);
    }
    CHECK(tried >= 60);
}

TEST_CASE("substitution") {
    Symbol x = sym("x"), h = sym("h");
    // identity binding
    MultiPoly p = P(x).pow(3) + P(h);
    std::map<Symbol, RationalFunction> id{{x, RationalFunction::variable(x)}};
    CHECK(p.substitute(id) == RationalFunction(p));
    // x -> 1/h
    std::map<Symbol, RationalFunction> inv{
        {x, RationalFunction(MultiPoly::constant(rat(1)), P(h))}};
    RationalFunction r = (P(x) * P(x)).substitute(inv);
    CHECK(r == RationalFunction(MultiPoly::constant(rat(1)), P(h) * P(h)));
    // denominator zero detection
    std::map<Symbol, RationalFunction> bad{{x, RationalFunction(MultiPoly::constant(rat(1)), P(h))}};
    RationalFunction den(P(x), MultiPoly::constant(rat(1)));
    CHECK_NOTHROW(den.substitute(bad));
}

TEST_CASE("infinity-model substitution reproduces the quintic chart") {
    // p = x^3 + t*x + h under x -> xbar/hbar^2 and h -> 1/hbar, cleared by hbar^6,
    // lands on xbar^3 + t*hbar^4*xbar + hbar^5.
    Symbol x = sym("x"), h = sym("h"), t = sym("t"), xb = sym("xbar"), hb = sym("hbar");
    MultiPoly p = P(x).pow(3) + P(t) * P(x) + P(h);
    std::map<Symbol, RationalFunction> bind{
        {x, RationalFunction(P(xb), P(hb) * P(hb))},
        {h, RationalFunction(MultiPoly::constant(rat(1)), P(hb))}};
    RationalFunction r = p.substitute(bind);
    RationalFunction cleared = r * RationalFunction(P(hb).pow(6));
    MultiPoly expect = P(xb).pow(3) + P(t) * P(hb).pow(4) * P(xb) + P(hb).pow(5);
    CHECK(cleared == RationalFunction(expect));
}

TEST_CASE("ord_at") {
    Symbol hb = sym("hbar"), t = sym("t");
    WitnessConfig cfg;
    MultiPoly delta = P(hb).pow(10) * (MultiPoly::constant(rat(27)) +
                                       MultiPoly::constant(rat(4)) * P(t).pow(3) * P(hb).pow(2));
    CHECK(ord_at(delta, Place::finite(hb, rat(0)), cfg) == 10);
    RationalFunction j(P(hb).pow(2) * MultiPoly::constant(rat(4)) * P(t).pow(3),
                       MultiPoly::constant(rat(27)) +
                           MultiPoly::constant(rat(4)) * P(t).pow(3) * P(hb).pow(2));
    CHECK(ord_at(j, Place::finite(hb, rat(0)), cfg) == 2);
    CHECK(ord_at(RationalFunction(rat(1)), Place::finite(hb, rat(0)), cfg) == 0);
    CHECK(!ord_at(RationalFunction(), Place::finite(hb, rat(0)), cfg).has_value());
    // infinity place: ord = -degree
    CHECK(ord_at(delta, Place::infinity(hb), cfg) == -12);
    // finite nonzero place
    MultiPoly shifted = (P(hb) - MultiPoly::constant(rat(3))).pow(2) * P(t);
    CHECK(ord_at(shifted, Place::finite(hb, rat(3)), cfg) == 2);
}

TEST_CASE("ord_at is a valuation") {
    Symbol hb = sym("hbar"), t = sym("t");
    WitnessRng rng(7);
    WitnessConfig cfg;
    Place at0 = Place::finite(hb, rat(0));
    int checked = 0;
    for (int i = 0; i < 60 && checked < 20; ++i) {
        MultiPoly f = random_poly(rng, {hb, t}, 3, 3);
        MultiPoly g = random_poly(rng, {hb, t}, 3, 3);
        if (f.is_zero() || g.is_zero()) continue;
        ++checked;
        auto of = ord_at(f, at0, cfg), og = ord_at(g, at0, cfg);
        CHECK(ord_at(f * g, at0, cfg) == *of + *og);
        if (!(f + g).is_zero()) {
            auto os = ord_at(f + g, at0, cfg);
            CHECK(*os >= std::min(*of, *og));
            if (*of != *og) CHECK(*os == std::min(*of, *og));
        }
    }
    CHECK(checked >= 15);
}

TEST_CASE("rational function reduction") {
    Symbol x = sym("x"), y = sym("y");
    // monomial cancellation
    RationalFunction f(P(x).pow(3) * P(y), P(x) * P(y) * P(y));
    CHECK(f == RationalFunction(P(x) * P(x), P(y)));
    // univariate gcd cancellation
    MultiPoly common = P(x) + MultiPoly::constant(rat(1));
    RationalFunction g(common * (P(x) - MultiPoly::constant(rat(2))), common * P(x));
    CHECK(g.num() == P(x) - MultiPoly::constant(rat(2)));
    CHECK(g.den() == P(x));
    // denominator sign normalization
    RationalFunction h(P(x), MultiPoly::monomial(x, 1, rat(-2)));
    CHECK(sgn(h.den().leading_rational()) > 0);
    CHECK_THROWS_AS(RationalFunction(P(x), MultiPoly()), DivisionByZeroPoly);
}

TEST_CASE("json round trip") {
    Symbol x = sym("x"), y = sym("y");
    MultiPoly p = P(x).pow(2) * P(y) * MultiPoly::constant(rat(3, 4)) - P(y) + MultiPoly::constant(rat(7));
    CHECK(MultiPoly::from_json(p.to_json()) == p);
    CHECK(rat_from_string("3/4") == rat(3, 4));
    CHECK(rat_to_string(rat(-5)) == "-5");
    CHECK(rat_to_string(rat(5, 10)) == "1/2");
}
