#pragma once

#include <random>
#include <vector>

#include "multisign/core.hpp"

namespace test_support {

// Small-integer fraction arithmetic, kept deliberately separate from the
// library: cross-multiplication over long long with gcd reduction. Used
// as the independent oracle for the exact-rational operations.
struct Frac {
    long long num = 0;
    long long den = 1;

    static Frac reduced(long long n, long long d) {
        const long long g = std::gcd(n, d);
        return Frac{g == 0 ? 0 : n / g, g == 0 ? 1 : d / g};
    }

    Frac plus(const Frac& o) const { return reduced(num * o.den + o.num * den, den * o.den); }
    Frac minus(const Frac& o) const { return reduced(num * o.den - o.num * den, den * o.den); }
    Frac times(const Frac& o) const { return reduced(num * o.num, den * o.den); }
    int compare(const Frac& o) const {
        const long long l = num * o.den;
        const long long r = o.num * den;
        return l < r ? -1 : (l > r ? 1 : 0);
    }

    multisign::Magnitude to_magnitude() const {
        return multisign::Magnitude(multisign::BigInt(num), multisign::BigInt(den));
    }
};

inline multisign::Magnitude random_magnitude(std::mt19937& rng, bool allow_zero = true) {
    std::uniform_int_distribution<long long> num_dist(allow_zero ? 0 : 1, 24);
    std::uniform_int_distribution<long long> den_dist(1, 24);
    return Frac::reduced(num_dist(rng), den_dist(rng)).to_magnitude();
}

inline multisign::MultisignNumber random_number(std::mt19937& rng, int signs_count,
                                                bool allow_zero = true) {
    const multisign::Magnitude m = random_magnitude(rng, allow_zero);
    if (m.is_zero()) {
        return multisign::MultisignNumber::zero(signs_count);
    }
    std::uniform_int_distribution<int> sign_dist(1, signs_count);
    return multisign::MultisignNumber::make(signs_count, sign_dist(rng), m);
}

// The same finite carrier the law checks sweep: zero plus every
// (sign, nonzero magnitude) combination.
inline std::vector<multisign::MultisignNumber> grid_universe(
    int signs_count, const std::vector<multisign::Magnitude>& magnitudes) {
    std::vector<multisign::MultisignNumber> universe;
    universe.push_back(multisign::MultisignNumber::zero(signs_count));
    for (int d = 1; d <= signs_count; ++d) {
        for (const auto& m : magnitudes) {
            if (!m.is_zero()) {
                universe.push_back(multisign::MultisignNumber::make(signs_count, d, m));
            }
        }
    }
    return universe;
}

}  // namespace test_support
