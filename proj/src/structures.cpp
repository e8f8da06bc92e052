#include "multisign/structures.hpp"

#include <ostream>
#include <utility>

namespace multisign {

namespace {

std::string shape_str(const std::vector<int>& shape) {
    std::string out = "(";
    for (std::size_t t = 0; t < shape.size(); ++t) {
        if (t > 0) out += ",";
        out += std::to_string(shape[t]);
    }
    return out + ")";
}

void require_same_shape(const MultisignTuple& t1, const MultisignTuple& t2,
                        const char* operation) {
    if (t1.shape() != t2.shape()) {
        throw ShapeMismatch(std::string(operation) + ": shapes " + shape_str(t1.shape()) +
                            " and " + shape_str(t2.shape()) + " differ");
    }
}

}  // namespace

MultisignTuple::MultisignTuple(std::vector<MultisignNumber> slots)
    : slots_(std::move(slots)) {
    if (slots_.empty()) {
        throw ShapeMismatch("tuple must have at least one slot");
    }
}

MultisignTuple MultisignTuple::zero(const std::vector<int>& shape) {
    std::vector<MultisignNumber> slots;
    slots.reserve(shape.size());
    for (int s : shape) slots.push_back(MultisignNumber::zero(s));
    return MultisignTuple(std::move(slots));
}

MultisignTuple MultisignTuple::one(const std::vector<int>& shape) {
    std::vector<MultisignNumber> slots;
    slots.reserve(shape.size());
    for (int s : shape) slots.push_back(MultisignNumber::one(s));
    return MultisignTuple(std::move(slots));
}

std::vector<int> MultisignTuple::shape() const {
    std::vector<int> out;
    out.reserve(slots_.size());
    for (const auto& slot : slots_) out.push_back(slot.signs_count());
    return out;
}

std::string MultisignTuple::str() const {
    std::string out = "(";
    for (std::size_t t = 0; t < slots_.size(); ++t) {
        if (t > 0) out += ", ";
        out += slots_[t].str();
    }
    return out + ")";
}

MultisignTuple tuple_add(const MultisignTuple& t1, const MultisignTuple& t2) {
    require_same_shape(t1, t2, "tuple_add");
    std::vector<MultisignNumber> slots;
    slots.reserve(t1.size());
    for (std::size_t t = 0; t < t1.size(); ++t) {
        slots.push_back(add(t1[t], t2[t]));
    }
    return MultisignTuple(std::move(slots));
}

MultisignTuple tuple_mul(const MultisignTuple& t1, const MultisignTuple& t2) {
    require_same_shape(t1, t2, "tuple_mul");
    std::vector<MultisignNumber> slots;
    slots.reserve(t1.size());
    for (std::size_t t = 0; t < t1.size(); ++t) {
        slots.push_back(mul(t1[t], t2[t]));
    }
    return MultisignTuple(std::move(slots));
}

std::vector<MultisignTuple> tuple_additive_inverses(const MultisignTuple& t) {
    std::vector<std::vector<MultisignNumber>> per_slot;
    per_slot.reserve(t.size());
    for (const auto& slot : t.slots()) {
        per_slot.push_back(additive_inverses(slot).solutions);
    }
    // A one-sign slot holding a nonzero value has no inverse at all, so
    // the whole product is empty.
    std::vector<MultisignTuple> out;
    for (const auto& choices : per_slot) {
        if (choices.empty()) return out;
    }
    std::vector<std::size_t> index(t.size(), 0);
    for (;;) {
        std::vector<MultisignNumber> slots;
        slots.reserve(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            slots.push_back(per_slot[i][index[i]]);
        }
        out.push_back(MultisignTuple(std::move(slots)));
        std::size_t i = t.size();
        while (i > 0) {
            --i;
            if (++index[i] < per_slot[i].size()) break;
            index[i] = 0;
            if (i == 0) return out;
        }
    }
}

MultisignTuple tuple_mul_inverse(const MultisignTuple& t) {
    std::vector<std::size_t> zero_slots;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i].is_zero()) zero_slots.push_back(i);
    }
    if (!zero_slots.empty()) {
        std::string msg = "tuple is not invertible; zero slot(s):";
        for (std::size_t i : zero_slots) msg += " " + std::to_string(i);
        throw NonInvertibleTuple(msg, std::move(zero_slots));
    }
    std::vector<MultisignNumber> slots;
    slots.reserve(t.size());
    for (const auto& slot : t.slots()) slots.push_back(mul_inverse(slot));
    return MultisignTuple(std::move(slots));
}

bool TupleCanonicalLess::operator()(const MultisignTuple& a, const MultisignTuple& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    CanonicalLess less;
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (less(a[t], b[t])) return true;
        if (less(b[t], a[t])) return false;
    }
    return false;
}

SignedRational::SignedRational(Sign sign, Magnitude magnitude)
    : sign_(sign), magnitude_(std::move(magnitude)) {
    if (magnitude_.is_zero()) {
        sign_ = Sign::Zero;
    } else if (sign_ == Sign::Zero) {
        throw ZeroSignNonzeroMagnitude("signed rational: zero sign with magnitude " +
                                       magnitude_.str());
    }
}

BigRational SignedRational::value() const {
    BigRational q(magnitude_.numerator(), magnitude_.denominator());
    return sign_ == Sign::Negative ? -q : q;
}

SignedRational SignedRational::from_value(const BigRational& value) {
    if (value == 0) {
        return SignedRational();
    }
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    Magnitude mag(boost::multiprecision::abs(num), den);
    return SignedRational(value < 0 ? Sign::Negative : Sign::Positive, std::move(mag));
}

SignedRational SignedRational::operator+(const SignedRational& rhs) const {
    return from_value(value() + rhs.value());
}

SignedRational SignedRational::operator*(const SignedRational& rhs) const {
    return from_value(value() * rhs.value());
}

std::string SignedRational::str() const {
    switch (sign_) {
        case Sign::Zero: return "0";
        case Sign::Positive: return "+" + magnitude_.str();
        case Sign::Negative: return "-" + magnitude_.str();
    }
    return "0";
}

SignedRational SignedRational::parse(std::string_view text) {
    if (text.empty()) {
        throw SyntaxError("empty signed rational", 0);
    }
    Sign sign = Sign::Positive;
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') {
        sign = text[0] == '-' ? Sign::Negative : Sign::Positive;
        pos = 1;
    }
    Magnitude mag = Magnitude::parse_prefix(text, pos);
    if (pos != text.size()) {
        throw SyntaxError("unexpected trailing characters in signed rational", pos);
    }
    if (mag.is_zero()) {
        return SignedRational();
    }
    return SignedRational(sign, std::move(mag));
}

SignedRational to_signed(const MultisignNumber& x) {
    if (x.signs_count() != 2) {
        throw NotTwoSigns("conversion to a signed rational requires exactly 2 signs, got " +
                          std::to_string(x.signs_count()));
    }
    switch (x.sign()) {
        case 0: return SignedRational();
        case 1: return SignedRational(SignedRational::Sign::Positive, x.magnitude());
        default: return SignedRational(SignedRational::Sign::Negative, x.magnitude());
    }
}

MultisignNumber from_signed(const SignedRational& r) {
    switch (r.sign()) {
        case SignedRational::Sign::Zero: return MultisignNumber::zero(2);
        case SignedRational::Sign::Positive: return MultisignNumber::make(2, 1, r.magnitude());
        case SignedRational::Sign::Negative: return MultisignNumber::make(2, 2, r.magnitude());
    }
    return MultisignNumber::zero(2);
}

std::ostream& operator<<(std::ostream& os, const MultisignTuple& t) {
    return os << t.str();
}

std::ostream& operator<<(std::ostream& os, const SignedRational& r) {
    return os << r.str();
}

}  // namespace multisign
