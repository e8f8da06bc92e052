#include "multisign/magnitude.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace multisign {

Magnitude::Magnitude(long long value) : num_(value), den_(1) {
    if (value < 0) {
        throw UnderflowError("magnitude cannot be negative");
    }
}

Magnitude::Magnitude(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ <= 0) {
        throw SemanticError("magnitude denominator must be positive");
    }
    if (num_ < 0) {
        throw UnderflowError("magnitude cannot be negative");
    }
    reduce();
}

void Magnitude::reduce() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Magnitude Magnitude::operator+(const Magnitude& rhs) const {
    return Magnitude(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Magnitude Magnitude::operator-(const Magnitude& rhs) const {
    if (*this < rhs) {
        throw UnderflowError("magnitude difference requires a >= b: " + str() +
                             " - " + rhs.str());
    }
    return Magnitude(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

Magnitude Magnitude::operator*(const Magnitude& rhs) const {
    return Magnitude(num_ * rhs.num_, den_ * rhs.den_);
}

Magnitude Magnitude::inverse() const {
    if (is_zero()) {
        throw ZeroInverseError("zero magnitude has no multiplicative inverse");
    }
    return Magnitude(den_, num_);
}

std::strong_ordering Magnitude::operator<=>(const Magnitude& rhs) const {
    const BigInt lhs_cross = num_ * rhs.den_;
    const BigInt rhs_cross = rhs.num_ * den_;
    if (lhs_cross < rhs_cross) return std::strong_ordering::less;
    if (lhs_cross > rhs_cross) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace {

std::string read_digits(std::string_view text, std::size_t& pos, const char* what) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos == start) {
        throw SyntaxError(std::string("expected ") + what, start);
    }
    return std::string(text.substr(start, pos - start));
}

}  // namespace

Magnitude Magnitude::parse_prefix(std::string_view text, std::size_t& pos) {
    const std::string int_part = read_digits(text, pos, "magnitude digits");
    if (pos < text.size() && text[pos] == '/') {
        const std::size_t slash = pos;
        ++pos;
        const std::string den_part = read_digits(text, pos, "denominator digits");
        BigInt den(den_part);
        if (den == 0) {
            throw SyntaxError("denominator must be nonzero", slash + 1);
        }
        return Magnitude(BigInt(int_part), std::move(den));
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        const std::string frac_part = read_digits(text, pos, "fractional digits");
        const BigInt scale =
            boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
        return Magnitude(BigInt(int_part) * scale + BigInt(frac_part), scale);
    }
    return Magnitude(BigInt(int_part), BigInt(1));
}

Magnitude Magnitude::parse(std::string_view text) {
    std::size_t pos = 0;
    Magnitude m = parse_prefix(text, pos);
    if (pos != text.size()) {
        throw SyntaxError("unexpected trailing characters in magnitude", pos);
    }
    return m;
}

std::string Magnitude::str() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Magnitude& m) {
    return os << m.str();
}

}  // namespace multisign
