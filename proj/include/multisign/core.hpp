#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "multisign/magnitude.hpp"

namespace multisign {

// Sign indices are plain integers: 0 is reserved for the additive
// identity, 1..s are the usable directions. Signs are labels, not an
// order; they compose cyclically under multiplication.

/// Cyclic composition of nonzero sign indices: i + j - 1, wrapped back
/// into 1..s when it overflows. Equivalent to addition in Z/sZ after
/// shifting labels down by one.
int sign_compose(int i, int j, int signs_count);

/**
 * A multisign number ^d p: a sign index d in 0..s together with a
 * nonnegative magnitude p, drawn from the carrier with s nonzero signs.
 *
 * Values are canonical by construction: magnitude 0 forces sign 0, and
 * sign 0 never carries a nonzero magnitude, so structural equality is
 * value equality. The sign count travels with each value; operations on
 * numbers with different sign counts throw SignCountMismatch rather
 * than coerce.
 *
 * Immutable value type; every operation is a pure function, so values
 * can be shared freely across threads.
 */
class MultisignNumber {
public:
    /// Canonicalizing factory: ^d 0 normalizes to ^0 0 for any valid d,
    /// while ^0 p with p != 0 is rejected.
    static MultisignNumber make(int signs_count, int sign, Magnitude magnitude);

    /// Additive identity ^0 0.
    static MultisignNumber zero(int signs_count);

    /// Multiplicative identity ^1 1.
    static MultisignNumber one(int signs_count);

    int signs_count() const noexcept { return signs_count_; }
    int sign() const noexcept { return sign_; }
    const Magnitude& magnitude() const noexcept { return magnitude_; }
    bool is_zero() const noexcept { return sign_ == 0; }

    bool operator==(const MultisignNumber&) const = default;

    /// Canonical literal: "0" for the additive identity, "^d m" otherwise.
    std::string str() const;

private:
    MultisignNumber(int s, int d, Magnitude p);

    int signs_count_;
    int sign_;
    Magnitude magnitude_;
};

/// Addition: equal signs add magnitudes; different signs cancel, the
/// larger magnitude keeps its sign; different signs with equal
/// magnitudes give ^0 0. Commutative, but only signed-associative:
/// triples with three distinct signs may not associate.
MultisignNumber add(const MultisignNumber& x, const MultisignNumber& y);

/// Multiplication: magnitudes multiply and signs compose cyclically;
/// ^0 0 is absorbing. Commutative and fully associative.
MultisignNumber mul(const MultisignNumber& x, const MultisignNumber& y);

/// Magnitude projection: |^d p| = p.
Magnitude abs(const MultisignNumber& x);

/// The unique y with mul(x, y) == ^1 1. The inverse sign is 1 when x
/// has sign 1 and s + 2 - sign(x) otherwise; the magnitude inverts.
MultisignNumber mul_inverse(const MultisignNumber& x);

/// A complete, duplicate-free solution set in canonical order
/// (ascending sign, then magnitude).
struct SolutionSet {
    std::vector<MultisignNumber> solutions;
    bool complete = true;
};

/// Every y with add(x, y) == ^0 0. A nonzero ^i a has exactly s - 1
/// inverses, the same-magnitude values with each other nonzero sign;
/// ^0 0 is its own unique inverse. For s = 1 a nonzero element has none.
SolutionSet additive_inverses(const MultisignNumber& x);

/// The complete solution set of mul(x, a) (+) b == ^0 0 for a != ^0 0:
/// exactly s - 1 solutions when b is nonzero, and {^0 0} when b is zero.
SolutionSet solve_linear(const MultisignNumber& a, const MultisignNumber& b);

/// Structural order used for deterministic iteration and reporting.
/// Not an algebraic order: signs do not order the carrier.
struct CanonicalLess {
    bool operator()(const MultisignNumber& x, const MultisignNumber& y) const;
};

inline MultisignNumber operator+(const MultisignNumber& x, const MultisignNumber& y) {
    return add(x, y);
}

inline MultisignNumber operator*(const MultisignNumber& x, const MultisignNumber& y) {
    return mul(x, y);
}

std::ostream& operator<<(std::ostream& os, const MultisignNumber& x);

}  // namespace multisign
