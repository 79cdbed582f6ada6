#ifndef PAINLEVE_LIU_IGUSA_HPP
#define PAINLEVE_LIU_IGUSA_HPP

#include "painleve/curves/weierstrass.hpp"

namespace painleve {

/// Transvectant (f,g)_k of binary forms of orders m and n in (X, Z).
MultiPoly transvectant(const MultiPoly& f, const MultiPoly& g, int m, int n, int k, Symbol X,
                       Symbol Z);

/// The J_2..J_10 invariants of a binary sextic, plus the derived I-family
/// entries Liu's decision procedure consumes.  J_2i is homogeneous of degree
/// 2i in the sextic coefficients; J10 is discriminant-like.
struct IgusaData {
    MultiPoly J2, J4, J6, J8, J10;
    MultiPoly I2, I4, I12;
};

/// Exact invariants of y^2 = a0 x^6 + ... + a6 (quintics enter with a0 = 0).
IgusaData igusa_invariants(const WeierstrassG2& w);

/// Same, from raw sextic coefficients (a[i] multiplies x^(6-i)).
IgusaData igusa_invariants(const std::array<MultiPoly, 7>& a);

}  // namespace painleve

#endif
