#include "painleve/hamiltonian/matrix.hpp"

#include "painleve/algebra/resultant.hpp"

namespace painleve {

RFMatrix RFMatrix::identity(std::size_t n) {
    RFMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) r.a_[i][i] = RationalFunction(Rational(1));
    return r;
}

RFMatrix RFMatrix::operator+(const RFMatrix& o) const {
    RFMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r.a_[i][j] = a_[i][j] + o.a_[i][j];
    return r;
}

RFMatrix RFMatrix::operator-(const RFMatrix& o) const {
    RFMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r.a_[i][j] = a_[i][j] - o.a_[i][j];
    return r;
}

RFMatrix RFMatrix::operator*(const RFMatrix& o) const {
    RFMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            RationalFunction s;
            for (std::size_t k = 0; k < n_; ++k) s = s + a_[i][k] * o.a_[k][j];
            r.a_[i][j] = s;
        }
    return r;
}

RFMatrix RFMatrix::scale(const RationalFunction& f) const {
    return map([&](const RationalFunction& e) { return e * f; });
}

RFMatrix RFMatrix::commutator(const RFMatrix& o) const { return *this * o - o * *this; }

RationalFunction RFMatrix::trace() const {
    RationalFunction s;
    for (std::size_t i = 0; i < n_; ++i) s = s + a_[i][i];
    return s;
}

bool RFMatrix::is_zero() const {
    for (const auto& row : a_)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

MultiPoly RFMatrix::char_poly(Symbol y) const {
    // clear denominators: D = product of distinct denominators
    std::vector<MultiPoly> dens;
    MultiPoly D = MultiPoly::constant(Rational(1));
    for (const auto& row : a_)
        for (const auto& e : row) {
            if (e.den().is_constant()) continue;
            bool seen = false;
            for (const auto& d : dens) seen = seen || d == e.den();
            if (!seen) {
                dens.push_back(e.den());
                D = D * e.den();
            }
        }
    std::vector<std::vector<MultiPoly>> M(n_, std::vector<MultiPoly>(n_));
    MultiPoly ypoly = MultiPoly::variable(y);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            RationalFunction e = -a_[i][j];
            if (i == j) e = e + RationalFunction(ypoly);
            RationalFunction cleared = e * RationalFunction(D);
            M[i][j] = cleared.as_polynomial();
        }
    }
    MultiPoly det = bareiss_determinant(std::move(M));
    for (std::size_t k = 0; k < n_; ++k) det = det.divide_exact_or_throw(D);
    return det;
}

}  // namespace painleve
