#include "multisign/core.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace multisign {

namespace {

void require_valid_signs_count(int signs_count) {
    if (signs_count < 1) {
        throw SignOutOfRange("signs_count must be at least 1, got " +
                             std::to_string(signs_count));
    }
}

void require_same_signs_count(const MultisignNumber& x, const MultisignNumber& y,
                              const char* operation) {
    if (x.signs_count() != y.signs_count()) {
        throw SignCountMismatch(std::string(operation) + ": operands have " +
                                std::to_string(x.signs_count()) + " and " +
                                std::to_string(y.signs_count()) + " signs");
    }
}

}  // namespace

int sign_compose(int i, int j, int signs_count) {
    require_valid_signs_count(signs_count);
    if (i < 1 || i > signs_count || j < 1 || j > signs_count) {
        throw SignOutOfRange("sign_compose requires nonzero signs in 1.." +
                             std::to_string(signs_count));
    }
    long long k = static_cast<long long>(i) + j - 1;
    if (k > signs_count) {
        k -= signs_count;
    }
    return static_cast<int>(k);
}

MultisignNumber::MultisignNumber(int s, int d, Magnitude p)
    : signs_count_(s), sign_(d), magnitude_(std::move(p)) {}

MultisignNumber MultisignNumber::make(int signs_count, int sign, Magnitude magnitude) {
    require_valid_signs_count(signs_count);
    if (sign < 0 || sign > signs_count) {
        throw SignOutOfRange("sign " + std::to_string(sign) + " out of range 0.." +
                             std::to_string(signs_count));
    }
    if (magnitude.is_zero()) {
        return MultisignNumber(signs_count, 0, Magnitude());
    }
    if (sign == 0) {
        throw ZeroSignNonzeroMagnitude(
            "sign 0 is reserved for the additive identity; magnitude is " +
            magnitude.str());
    }
    return MultisignNumber(signs_count, sign, std::move(magnitude));
}

MultisignNumber MultisignNumber::zero(int signs_count) {
    require_valid_signs_count(signs_count);
    return MultisignNumber(signs_count, 0, Magnitude());
}

MultisignNumber MultisignNumber::one(int signs_count) {
    require_valid_signs_count(signs_count);
    return MultisignNumber(signs_count, 1, Magnitude(1));
}

std::string MultisignNumber::str() const {
    if (is_zero()) {
        return "0";
    }
    return "^" + std::to_string(sign_) + " " + magnitude_.str();
}

MultisignNumber add(const MultisignNumber& x, const MultisignNumber& y) {
    require_same_signs_count(x, y, "add");
    const int s = x.signs_count();
    if (x.sign() == y.sign()) {
        return MultisignNumber::make(s, x.sign(), x.magnitude() + y.magnitude());
    }
    const auto cmp = x.magnitude() <=> y.magnitude();
    if (cmp > 0) {
        return MultisignNumber::make(s, x.sign(), x.magnitude() - y.magnitude());
    }
    if (cmp < 0) {
        return MultisignNumber::make(s, y.sign(), y.magnitude() - x.magnitude());
    }
    return MultisignNumber::zero(s);
}

MultisignNumber mul(const MultisignNumber& x, const MultisignNumber& y) {
    require_same_signs_count(x, y, "mul");
    const int s = x.signs_count();
    if (x.is_zero() || y.is_zero()) {
        return MultisignNumber::zero(s);
    }
    return MultisignNumber::make(s, sign_compose(x.sign(), y.sign(), s),
                                 x.magnitude() * y.magnitude());
}

Magnitude abs(const MultisignNumber& x) {
    return x.magnitude();
}

MultisignNumber mul_inverse(const MultisignNumber& x) {
    if (x.is_zero()) {
        throw ZeroInverseError("^0 0 has no multiplicative inverse");
    }
    const int s = x.signs_count();
    const int j = x.sign() == 1 ? 1 : s + 2 - x.sign();
    return MultisignNumber::make(s, j, x.magnitude().inverse());
}

SolutionSet additive_inverses(const MultisignNumber& x) {
    SolutionSet out;
    if (x.is_zero()) {
        out.solutions.push_back(x);
        return out;
    }
    const int s = x.signs_count();
    for (int j = 1; j <= s; ++j) {
        if (j != x.sign()) {
            out.solutions.push_back(MultisignNumber::make(s, j, x.magnitude()));
        }
    }
    return out;
}

SolutionSet solve_linear(const MultisignNumber& a, const MultisignNumber& b) {
    require_same_signs_count(a, b, "solve_linear");
    if (a.is_zero()) {
        throw ZeroCoefficient("solve_linear: coefficient a must be nonzero");
    }
    const int s = a.signs_count();
    SolutionSet out;
    if (b.is_zero()) {
        // mul(x, a) must vanish, and with a nonzero that forces x = ^0 0.
        out.solutions.push_back(MultisignNumber::zero(s));
        return out;
    }
    // mul(x, a) must be an additive inverse of b, i.e. ^k |b| for every
    // nonzero k != sign(b); multiplying by the inverse of a recovers x.
    const MultisignNumber a_inv = mul_inverse(a);
    for (int k = 1; k <= s; ++k) {
        if (k == b.sign()) {
            continue;
        }
        out.solutions.push_back(mul(MultisignNumber::make(s, k, b.magnitude()), a_inv));
    }
    std::sort(out.solutions.begin(), out.solutions.end(), CanonicalLess{});
    return out;
}

bool CanonicalLess::operator()(const MultisignNumber& x, const MultisignNumber& y) const {
    if (x.signs_count() != y.signs_count()) {
        return x.signs_count() < y.signs_count();
    }
    if (x.sign() != y.sign()) {
        return x.sign() < y.sign();
    }
    return x.magnitude() < y.magnitude();
}

std::ostream& operator<<(std::ostream& os, const MultisignNumber& x) {
    return os << x.str();
}

}  // namespace multisign
