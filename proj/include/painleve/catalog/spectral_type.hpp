#ifndef PAINLEVE_CATALOG_SPECTRAL_TYPE_HPP
#define PAINLEVE_CATALOG_SPECTRAL_TYPE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "painleve/algebra/rational.hpp"

namespace painleve {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct RefinementError : std::runtime_error {
    explicit RefinementError(const std::string& what) : std::runtime_error(what) {}
};

struct SizeMismatch : std::runtime_error {
    explicit SizeMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// One top-level group of a local type: either a bare part or a parenthesized
/// nest with an optional ramification subscript.
struct SpectralGroup {
    int depth = 0;                    // parenthesis nesting depth
    long ramification = 1;            // subscript q
    std::vector<int> innermost;       // leaf parts, left to right
    long inner_sum() const {
        long s = 0;
        for (int v : innermost) s += v;
        return s;
    }
    long size() const { return ramification * inner_sum(); }
};

/// Local type at one singular point of the linear system.
struct LocalType {
    std::vector<SpectralGroup> groups;
    std::vector<std::vector<int>> levels;  // outermost (coarsest) to innermost

    int depth() const;
    long ramification() const;  // max subscript over groups
    long size() const;          // sum of q-weighted group sizes
};

struct SpectralType {
    std::string source;
    std::vector<LocalType> points;
    long matrix_size = 0;
};

/// Parses the paper's nested-parenthesis notation, e.g. "((11))((1)(1))",
/// "31,22,22,1111", "(((((((1)))))))_2", "(1)_211,(2)(2)".
SpectralType parse_spectral_type(const std::string& s);

/// Poincare rank + 1 per point: depth/ramification + 1.
std::vector<Rational> singularity_pattern(const SpectralType& t);

/// Renders a pattern like "9/2", "4+1", "2+1+1+1" (descending order).
std::string pattern_string(const std::vector<Rational>& pattern);

}  // namespace painleve

#endif
