#ifndef PAINLEVE_CATALOG_EXPR_HPP
#define PAINLEVE_CATALOG_EXPR_HPP

#include <map>
#include <string>

#include "painleve/algebra/rational_function.hpp"
#include "painleve/catalog/spectral_type.hpp"

namespace painleve {

/// Parses an arithmetic expression over symbols into an exact rational
/// function.  Supports integers, identifiers, + - * / ^, parentheses, and the
/// recurring sub-Hamiltonian templates
///   HIII_D6(a, b, t, q, p) = (p^2 q^2 - (q^2 - b q - t) p - a q)/t
///   HIII_D7(a, t, q, p)    = (p^2 q^2 + a q p + t p + q)/t
///   HIII_D8(t, q, p)       = (p^2 q^2 + q p - q - t/q)/t
/// Semicolons separate arguments interchangeably with commas.
RationalFunction parse_expression(const std::string& text);

}  // namespace painleve

#endif
