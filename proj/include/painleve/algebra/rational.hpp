#ifndef PAINLEVE_ALGEBRA_RATIONAL_HPP
#define PAINLEVE_ALGEBRA_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <string_view>

namespace painleve {

/// Exact rational numbers. mpq_class keeps gcd(num,den)=1 and den>0 after
/// canonicalization; every constructor below canonicalizes.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational rat_from_string(std::string_view s);

/// Renders as "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rational& r);

bool rat_is_integer(const Rational& r);

/// Integer square root test: returns true and sets root when r = root^2.
bool rat_is_square(const Rational& r, Rational& root);

/// Deterministic generator for small-height rationals used as genericity
/// witnesses.  SplitMix64 under the hood so streams are identical across
/// platforms for a fixed seed.
class WitnessRng {
public:
    explicit WitnessRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    /// Nonzero rational with |numerator| <= height and 1 <= denominator <= height.
    Rational small_rational(int height = 13);

private:
    std::uint64_t state_;
};

}  // namespace painleve

#endif
