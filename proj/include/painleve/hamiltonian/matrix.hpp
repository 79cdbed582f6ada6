#ifndef PAINLEVE_HAMILTONIAN_MATRIX_HPP
#define PAINLEVE_HAMILTONIAN_MATRIX_HPP

#include <vector>

#include "painleve/algebra/rational_function.hpp"

namespace painleve {

/// Small dense matrix over the rational-function field.
class RFMatrix {
public:
    RFMatrix() = default;
    explicit RFMatrix(std::size_t n) : n_(n), a_(n, std::vector<RationalFunction>(n)) {}

    static RFMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    RationalFunction& at(std::size_t i, std::size_t j) { return a_[i][j]; }
    const RationalFunction& at(std::size_t i, std::size_t j) const { return a_[i][j]; }

    RFMatrix operator+(const RFMatrix& o) const;
    RFMatrix operator-(const RFMatrix& o) const;
    RFMatrix operator*(const RFMatrix& o) const;
    RFMatrix scale(const RationalFunction& f) const;
    RFMatrix commutator(const RFMatrix& o) const;  // [this, o]

    RationalFunction trace() const;
    bool is_zero() const;

    /// Entrywise map.
    template <typename F>
    RFMatrix map(F&& f) const {
        RFMatrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r.a_[i][j] = f(a_[i][j]);
        return r;
    }

    /// det(y I - this), exact, via fraction-free elimination on the
    /// denominator-cleared polynomial matrix.
    MultiPoly char_poly(Symbol y) const;

private:
    std::size_t n_ = 0;
    std::vector<std::vector<RationalFunction>> a_;
};

}  // namespace painleve

#endif
