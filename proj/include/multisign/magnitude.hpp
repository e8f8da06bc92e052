#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "multisign/errors.hpp"

namespace multisign {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Exact nonnegative rational magnitude.
 *
 * Always held in lowest terms with denominator >= 1 and zero stored as
 * 0/1, so structural equality coincides with mathematical equality.
 * Negative values are not representable: direction lives in the sign of
 * the enclosing multisign number, never in the magnitude. The difference
 * a - b is the cancellation difference (the unique c with b + c = a) and
 * requires a >= b. Components are arbitrary precision, so exhaustive
 * law sweeps cannot overflow.
 */
class Magnitude {
public:
    Magnitude() : num_(0), den_(1) {}
    Magnitude(long long value);  // implicit on purpose: Magnitude m = 3
    Magnitude(BigInt numerator, BigInt denominator);

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_one() const noexcept { return num_ == 1 && den_ == 1; }

    Magnitude operator+(const Magnitude& rhs) const;
    /// Cancellation difference; throws UnderflowError when *this < rhs.
    Magnitude operator-(const Magnitude& rhs) const;
    Magnitude operator*(const Magnitude& rhs) const;

    /// Reciprocal; throws ZeroInverseError on zero.
    Magnitude inverse() const;

    // Total order by cross-multiplied integer comparison.
    std::strong_ordering operator<=>(const Magnitude& rhs) const;
    bool operator==(const Magnitude& rhs) const = default;

    /// Accepts "p", "p/q" and terminating decimals ("0.5" parses to 1/2).
    static Magnitude parse(std::string_view text);

    /// Parses a magnitude starting at `pos`, advancing `pos` past it.
    /// SyntaxError positions are relative to the start of `text`.
    static Magnitude parse_prefix(std::string_view text, std::size_t& pos);

    /// Lowest-terms "p/q", or just "p" when the denominator is 1.
    std::string str() const;

private:
    void reduce();

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Magnitude& m);

}  // namespace multisign
