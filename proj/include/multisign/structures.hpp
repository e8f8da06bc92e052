#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "multisign/core.hpp"

namespace multisign {

using BigRational = boost::multiprecision::cpp_rational;

/**
 * Fixed-length vector of multisign numbers, one sign count per slot.
 * The shape (s_1, ..., s_z) is carried by the slots themselves; two
 * tuples are operable together only when their shapes match exactly.
 */
class MultisignTuple {
public:
    explicit MultisignTuple(std::vector<MultisignNumber> slots);

    /// (^0 0, ..., ^0 0): additive identity for the given shape.
    static MultisignTuple zero(const std::vector<int>& shape);

    /// (^1 1, ..., ^1 1): multiplicative identity for the given shape.
    static MultisignTuple one(const std::vector<int>& shape);

    std::size_t size() const noexcept { return slots_.size(); }
    const MultisignNumber& operator[](std::size_t t) const { return slots_[t]; }
    const std::vector<MultisignNumber>& slots() const noexcept { return slots_; }
    std::vector<int> shape() const;

    bool operator==(const MultisignTuple&) const = default;

    /// "(lit, lit, ...)" in canonical literal syntax.
    std::string str() const;

private:
    std::vector<MultisignNumber> slots_;
};

/// Componentwise addition; throws ShapeMismatch on different shapes.
MultisignTuple tuple_add(const MultisignTuple& t1, const MultisignTuple& t2);

/// Componentwise multiplication; throws ShapeMismatch on different shapes.
MultisignTuple tuple_mul(const MultisignTuple& t1, const MultisignTuple& t2);

/// Cartesian product of the per-slot additive inverse sets. A nonzero
/// slot contributes its s_t - 1 inverses, a zero slot only itself, so an
/// all-nonzero tuple has exactly (s_1 - 1) * ... * (s_z - 1) inverses.
/// Deterministic order: later slots vary fastest, each ascending by sign.
std::vector<MultisignTuple> tuple_additive_inverses(const MultisignTuple& t);

/// Componentwise multiplicative inverse. Throws NonInvertibleTuple
/// listing the zero slots when any component is ^0 0.
MultisignTuple tuple_mul_inverse(const MultisignTuple& t);

/// Structural order over same-shape tuples for deterministic iteration.
struct TupleCanonicalLess {
    bool operator()(const MultisignTuple& a, const MultisignTuple& b) const;
};

/**
 * Classical signed rational: an explicit positive/negative/zero polarity
 * over a nonnegative magnitude, with sign zero exactly for magnitude 0.
 *
 * Deliberately a separate type from the two-sign multisign numbers, so
 * that to_signed/from_signed form a real boundary. Its arithmetic routes
 * through boost's signed rationals and is independent of the multisign
 * addition and multiplication rules.
 */
class SignedRational {
public:
    enum class Sign { Zero, Positive, Negative };

    SignedRational() = default;  // zero
    SignedRational(Sign sign, Magnitude magnitude);

    Sign sign() const noexcept { return sign_; }
    const Magnitude& magnitude() const noexcept { return magnitude_; }
    bool is_zero() const noexcept { return sign_ == Sign::Zero; }

    /// The value as a boost signed rational.
    BigRational value() const;
    static SignedRational from_value(const BigRational& value);

    SignedRational operator+(const SignedRational& rhs) const;
    SignedRational operator*(const SignedRational& rhs) const;

    bool operator==(const SignedRational&) const = default;

    /// "+p/q", "-p/q" or "0".
    std::string str() const;

    /// Accepts an optional leading '+' or '-' followed by a magnitude.
    static SignedRational parse(std::string_view text);

private:
    Sign sign_ = Sign::Zero;
    Magnitude magnitude_{};
};

/// Two-sign bridge: ^1 a -> +a, ^2 a -> -a, ^0 0 -> 0.
/// Throws NotTwoSigns unless x lives in the two-sign carrier.
SignedRational to_signed(const MultisignNumber& x);

/// Inverse of to_signed; always produces a two-sign multisign number.
MultisignNumber from_signed(const SignedRational& r);

std::ostream& operator<<(std::ostream& os, const MultisignTuple& t);
std::ostream& operator<<(std::ostream& os, const SignedRational& r);

}  // namespace multisign
