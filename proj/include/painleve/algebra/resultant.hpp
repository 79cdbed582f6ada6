#ifndef PAINLEVE_ALGEBRA_RESULTANT_HPP
#define PAINLEVE_ALGEBRA_RESULTANT_HPP

#include <stdexcept>

#include "painleve/algebra/multipoly.hpp"

namespace painleve {

struct DegreeZero : std::runtime_error {
    explicit DegreeZero(const std::string& what) : std::runtime_error(what) {}
};

/// Pseudo-remainder of a by b in var: lc(b)^(da-db+1) * a  mod  b.
MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, Symbol var);

/// Resultant in var, equal to the Sylvester determinant.  Computed by the
/// subresultant pseudo-remainder sequence.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Symbol var);

/// Sylvester-matrix determinant route; reference implementation used by the
/// test suite to pin the PRS output.
MultiPoly resultant_sylvester(const MultiPoly& p, const MultiPoly& q, Symbol var);

/// Classical discriminant: (-1)^(n(n-1)/2) res(p, p') / lc(p).
/// disc(x^3+ax+b) = -4a^3-27b^2.
MultiPoly discriminant_poly(const MultiPoly& p, Symbol var);

/// gcd in var over the fraction field of the remaining variables, normalized
/// integer-primitive with monomial content removed.  Constant gcd reports as 1.
MultiPoly gcd_univariate(const MultiPoly& p, const MultiPoly& q, Symbol var);

/// Fraction-free determinant (Bareiss) of a square MultiPoly matrix.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

}  // namespace painleve

#endif
