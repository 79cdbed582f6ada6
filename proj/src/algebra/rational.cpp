#include "painleve/algebra/rational.hpp"

#include <stdexcept>

namespace painleve {

Rational rat_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational r{std::string(s)};
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: " + std::string(s));
    }
}

std::string rat_to_string(const Rational& r) {
    return r.get_str();
}

bool rat_is_integer(const Rational& r) {
    return r.get_den() == 1;
}

bool rat_is_square(const Rational& r, Rational& root) {
    if (sgn(r) < 0) return false;
    mpz_class num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

std::uint64_t WitnessRng::next_u64() {
    // SplitMix64; fixed constants keep streams platform-identical.
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Rational WitnessRng::small_rational(int height) {
    const std::uint64_t h = static_cast<std::uint64_t>(height);
    long num = 0;
    while (num == 0) num = static_cast<long>(next_u64() % (2 * h + 1)) - height;
    long den = static_cast<long>(next_u64() % h) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace painleve
