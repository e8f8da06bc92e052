#include "multisign/laws.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace multisign {

namespace {

struct LawNameEntry {
    LawId id;
    std::string_view name;
};

constexpr std::array<LawNameEntry, 9> kLawNames{{
    {LawId::SignedAssocAdd, "signed-assoc-add"},
    {LawId::IdentityAssocAdd, "identity-assoc-add"},
    {LawId::FullAssocAdd, "full-assoc-add"},
    {LawId::FullAssocMul, "full-assoc-mul"},
    {LawId::CommutAdd, "commut-add"},
    {LawId::CommutMul, "commut-mul"},
    {LawId::Distributivity, "distributivity"},
    {LawId::InverseStructure, "inverse-structure"},
    {LawId::IsomorphismS2, "isomorphism"},
}};

void ensure_budget(std::size_t universe_size, int arity, const CheckOptions& opt) {
    const auto n = static_cast<unsigned long long>(universe_size);
    unsigned long long cases = 1;
    for (int i = 0; i < arity; ++i) {
        if (n == 0) break;
        if (cases > opt.budget / n) {
            throw DomainTooLarge("sweep over " + std::to_string(universe_size) +
                                 "^" + std::to_string(arity) + " operand tuples exceeds the budget of " +
                                 std::to_string(opt.budget));
        }
        cases *= n;
    }
    if (cases > opt.budget) {
        throw DomainTooLarge("sweep of " + std::to_string(cases) +
                             " operand tuples exceeds the budget of " +
                             std::to_string(opt.budget));
    }
}

class Recorder {
public:
    Recorder(LawId law, const Domain& dom, const CheckOptions& opt) : opt_(&opt) {
        report_.law = law;
        report_.signs_count = dom.signs_count;
        report_.magnitude_count = dom.magnitudes.size();
    }

    void count_case() { ++report_.cases_checked; }

    void record_failure(std::vector<MultisignNumber> operands, std::string left,
                        std::string right, std::string context = {}) {
        ++report_.counterexample_total;
        if (report_.counterexamples.size() < opt_->counterexample_cap) {
            report_.counterexamples.push_back(
                {std::move(operands), std::move(left), std::move(right), std::move(context)});
        }
    }

    LawReport finish() {
        report_.verdict =
            report_.counterexample_total == 0 ? Verdict::Holds : Verdict::Fails;
        return std::move(report_);
    }

private:
    LawReport report_;
    const CheckOptions* opt_;
};

int distinct_sign_labels(const MultisignNumber& x, const MultisignNumber& y,
                         const MultisignNumber& z) {
    const int i = x.sign(), j = y.sign(), k = z.sign();
    if (i == j && j == k) return 1;
    if (i == j || j == k || i == k) return 2;
    return 3;
}

MultisignNumber apply(BinaryOp op, const MultisignNumber& x, const MultisignNumber& y) {
    return op == BinaryOp::Add ? add(x, y) : mul(x, y);
}

LawReport check_associativity_filtered(LawId law, const Domain& dom, const CheckOptions& opt,
                                       bool (*filter)(const MultisignNumber&,
                                                      const MultisignNumber&,
                                                      const MultisignNumber&)) {
    const auto u = dom.universe();
    ensure_budget(u.size(), 3, opt);
    Recorder rec(law, dom, opt);
    for (const auto& x : u) {
        for (const auto& y : u) {
            for (const auto& z : u) {
                if (!filter(x, y, z)) continue;
                rec.count_case();
                const MultisignNumber left = add(add(x, y), z);
                const MultisignNumber right = add(x, add(y, z));
                if (!(left == right)) {
                    rec.record_failure({x, y, z}, left.str(), right.str());
                }
            }
        }
    }
    return rec.finish();
}

}  // namespace

Domain::Domain(int signs_count_in, std::vector<Magnitude> magnitudes_in)
    : signs_count(signs_count_in), magnitudes(std::move(magnitudes_in)) {
    if (signs_count < 1) {
        throw SignOutOfRange("domain signs_count must be at least 1");
    }
    std::sort(magnitudes.begin(), magnitudes.end());
    magnitudes.erase(std::unique(magnitudes.begin(), magnitudes.end()), magnitudes.end());
    if (magnitudes.empty() || !magnitudes.front().is_zero()) {
        magnitudes.insert(magnitudes.begin(), Magnitude());
    }
}

std::vector<MultisignNumber> Domain::universe() const {
    std::vector<MultisignNumber> u;
    u.push_back(MultisignNumber::zero(signs_count));
    for (int d = 1; d <= signs_count; ++d) {
        for (const Magnitude& m : magnitudes) {
            if (!m.is_zero()) {
                u.push_back(MultisignNumber::make(signs_count, d, m));
            }
        }
    }
    return u;
}

bool Domain::has_nonzero_magnitude() const {
    for (const Magnitude& m : magnitudes) {
        if (!m.is_zero()) return true;
    }
    return false;
}

std::string_view law_name(LawId law) {
    for (const auto& entry : kLawNames) {
        if (entry.id == law) return entry.name;
    }
    return "unknown";
}

std::optional<LawId> law_from_name(std::string_view name) {
    for (const auto& entry : kLawNames) {
        if (entry.name == name) return entry.id;
    }
    return std::nullopt;
}

std::vector<LawId> all_laws(int signs_count) {
    std::vector<LawId> laws;
    for (const auto& entry : kLawNames) {
        if (entry.id == LawId::IsomorphismS2 && signs_count != 2) continue;
        laws.push_back(entry.id);
    }
    return laws;
}

std::string_view verdict_name(Verdict v) {
    return v == Verdict::Holds ? "holds" : "fails";
}

LawReport check_signed_associativity_add(const Domain& dom, const CheckOptions& opt) {
    return check_associativity_filtered(
        LawId::SignedAssocAdd, dom, opt,
        [](const MultisignNumber& x, const MultisignNumber& y, const MultisignNumber& z) {
            return distinct_sign_labels(x, y, z) <= 2;
        });
}

LawReport check_identity_associativity_add(const Domain& dom, const CheckOptions& opt) {
    // The triples the <= 2 distinct-label filter leaves out even though
    // they must associate: the identity is an operand but all three
    // labels are distinct.
    return check_associativity_filtered(
        LawId::IdentityAssocAdd, dom, opt,
        [](const MultisignNumber& x, const MultisignNumber& y, const MultisignNumber& z) {
            return distinct_sign_labels(x, y, z) == 3 &&
                   (x.is_zero() || y.is_zero() || z.is_zero());
        });
}

LawReport check_full_associativity(BinaryOp op, const Domain& dom, const CheckOptions& opt) {
    const auto u = dom.universe();
    ensure_budget(u.size(), 3, opt);
    Recorder rec(op == BinaryOp::Add ? LawId::FullAssocAdd : LawId::FullAssocMul, dom, opt);
    for (const auto& x : u) {
        for (const auto& y : u) {
            for (const auto& z : u) {
                rec.count_case();
                const MultisignNumber left = apply(op, apply(op, x, y), z);
                const MultisignNumber right = apply(op, x, apply(op, y, z));
                if (!(left == right)) {
                    rec.record_failure({x, y, z}, left.str(), right.str());
                }
            }
        }
    }
    return rec.finish();
}

LawReport check_commutativity(BinaryOp op, const Domain& dom, const CheckOptions& opt) {
    const auto u = dom.universe();
    ensure_budget(u.size(), 2, opt);
    Recorder rec(op == BinaryOp::Add ? LawId::CommutAdd : LawId::CommutMul, dom, opt);
    for (const auto& x : u) {
        for (const auto& y : u) {
            rec.count_case();
            const MultisignNumber left = apply(op, x, y);
            const MultisignNumber right = apply(op, y, x);
            if (!(left == right)) {
                rec.record_failure({x, y}, left.str(), right.str());
            }
        }
    }
    return rec.finish();
}

LawReport check_distributivity(const Domain& dom, const CheckOptions& opt) {
    const auto u = dom.universe();
    ensure_budget(u.size(), 3, opt);
    Recorder rec(LawId::Distributivity, dom, opt);
    for (const auto& x : u) {
        for (const auto& y : u) {
            for (const auto& z : u) {
                rec.count_case();
                MultisignNumber left = mul(x, add(y, z));
                MultisignNumber right = add(mul(x, y), mul(x, z));
                if (!(left == right)) {
                    rec.record_failure({x, y, z}, left.str(), right.str(),
                                       "x * (y + z) vs x * y + x * z");
                }
                rec.count_case();
                left = mul(add(x, y), z);
                right = add(mul(x, z), mul(y, z));
                if (!(left == right)) {
                    rec.record_failure({x, y, z}, left.str(), right.str(),
                                       "(x + y) * z vs x * z + y * z");
                }
            }
        }
    }
    return rec.finish();
}

LawReport check_inverse_structure(const Domain& dom, const CheckOptions& opt) {
    const auto u = dom.universe();
    const int s = dom.signs_count;

    // Universe extended by the exact inverse magnitudes, so the unique
    // multiplicative inverse is guaranteed to be found by search.
    std::vector<MultisignNumber> extended = u;
    for (const Magnitude& m : dom.magnitudes) {
        if (m.is_zero()) continue;
        for (int d = 1; d <= s; ++d) {
            extended.push_back(MultisignNumber::make(s, d, m.inverse()));
        }
    }
    std::sort(extended.begin(), extended.end(), CanonicalLess{});
    extended.erase(std::unique(extended.begin(), extended.end()), extended.end());

    {
        const auto n = static_cast<unsigned long long>(u.size());
        const auto total = n * n + n * static_cast<unsigned long long>(extended.size());
        if (u.size() > opt.budget || total > opt.budget) {
            throw DomainTooLarge("inverse sweep of " + std::to_string(total) +
                                 " pairs exceeds the budget of " + std::to_string(opt.budget));
        }
    }

    Recorder rec(LawId::InverseStructure, dom, opt);
    const MultisignNumber identity = MultisignNumber::one(s);
    for (const auto& x : u) {
        std::vector<MultisignNumber> found_add;
        for (const auto& y : u) {
            rec.count_case();
            if (add(x, y).is_zero()) found_add.push_back(y);
        }
        if (x.is_zero()) {
            if (found_add.size() != 1 || !found_add.front().is_zero()) {
                rec.record_failure({x}, "1", std::to_string(found_add.size()),
                                   "additive inverses of the identity");
            }
            continue;
        }
        const auto expected_add = additive_inverses(x).solutions;
        if (found_add != expected_add) {
            rec.record_failure({x}, std::to_string(expected_add.size()),
                               std::to_string(found_add.size()),
                               "additive inverse set");
        }

        std::vector<MultisignNumber> found_mul;
        for (const auto& z : extended) {
            rec.count_case();
            if (mul(x, z) == identity) found_mul.push_back(z);
        }
        const MultisignNumber closed_form = mul_inverse(x);
        const int expected_sign = x.sign() == 1 ? 1 : s + 2 - x.sign();
        if (found_mul.size() != 1 || !(found_mul.front() == closed_form) ||
            closed_form.sign() != expected_sign || !(mul(x, closed_form) == identity)) {
            std::string found_str;
            for (const auto& z : found_mul) {
                if (!found_str.empty()) found_str += ", ";
                found_str += z.str();
            }
            rec.record_failure({x}, closed_form.str(),
                               found_str.empty() ? "none" : found_str,
                               "multiplicative inverse");
        }
    }
    return rec.finish();
}

LawReport check_isomorphism_s2(const Domain& dom, const CheckOptions& opt) {
    if (dom.signs_count != 2) {
        throw WrongSignCount("isomorphism check requires exactly 2 signs, got " +
                             std::to_string(dom.signs_count));
    }
    const auto u = dom.universe();
    ensure_budget(u.size(), 2, opt);
    Recorder rec(LawId::IsomorphismS2, dom, opt);

    // Identity elements must map to 1 and 0.
    rec.count_case();
    if (to_signed(MultisignNumber::one(2)).str() != "+1" ||
        !to_signed(MultisignNumber::zero(2)).is_zero()) {
        rec.record_failure({MultisignNumber::one(2)}, "+1",
                           to_signed(MultisignNumber::one(2)).str(), "identity images");
    }

    for (const auto& x : u) {
        rec.count_case();
        const MultisignNumber back = from_signed(to_signed(x));
        if (!(back == x)) {
            rec.record_failure({x}, x.str(), back.str(), "round-trip through signed rationals");
        }
    }
    for (const Magnitude& m : dom.magnitudes) {
        for (const auto polarity :
             {SignedRational::Sign::Positive, SignedRational::Sign::Negative}) {
            const SignedRational r =
                m.is_zero() ? SignedRational() : SignedRational(polarity, m);
            rec.count_case();
            const SignedRational back = to_signed(from_signed(r));
            if (!(back == r)) {
                rec.record_failure({from_signed(r)}, r.str(), back.str(),
                                   "round-trip through the two-sign carrier");
            }
        }
    }
    for (const auto& x : u) {
        for (const auto& y : u) {
            rec.count_case();
            SignedRational left = to_signed(add(x, y));
            SignedRational right = to_signed(x) + to_signed(y);
            if (!(left == right)) {
                rec.record_failure({x, y}, left.str(), right.str(), "addition homomorphism");
            }
            rec.count_case();
            left = to_signed(mul(x, y));
            right = to_signed(x) * to_signed(y);
            if (!(left == right)) {
                rec.record_failure({x, y}, left.str(), right.str(),
                                   "multiplication homomorphism");
            }
        }
    }
    return rec.finish();
}

LawReport run_law(LawId law, const Domain& dom, const CheckOptions& opt) {
    switch (law) {
        case LawId::SignedAssocAdd: return check_signed_associativity_add(dom, opt);
        case LawId::IdentityAssocAdd: return check_identity_associativity_add(dom, opt);
        case LawId::FullAssocAdd: return check_full_associativity(BinaryOp::Add, dom, opt);
        case LawId::FullAssocMul: return check_full_associativity(BinaryOp::Mul, dom, opt);
        case LawId::CommutAdd: return check_commutativity(BinaryOp::Add, dom, opt);
        case LawId::CommutMul: return check_commutativity(BinaryOp::Mul, dom, opt);
        case LawId::Distributivity: return check_distributivity(dom, opt);
        case LawId::InverseStructure: return check_inverse_structure(dom, opt);
        case LawId::IsomorphismS2: return check_isomorphism_s2(dom, opt);
    }
    throw Error("unknown law id");
}

std::vector<LawOutcome> run_law_suite(const Domain& dom, const std::vector<LawId>& laws,
                                      const CheckOptions& opt) {
    std::vector<LawOutcome> outcomes;
    outcomes.reserve(laws.size());
    for (LawId law : laws) {
        LawOutcome outcome;
        outcome.law = law;
        try {
            outcome.report = run_law(law, dom, opt);
        } catch (const DomainTooLarge& e) {
            outcome.error = e.what();
            outcome.budget_exceeded = true;
        } catch (const Error& e) {
            outcome.error = e.what();
        }
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

Verdict expected_verdict(LawId law, const Domain& dom) {
    if (law == LawId::FullAssocAdd && dom.signs_count >= 3 && dom.has_nonzero_magnitude()) {
        return Verdict::Fails;
    }
    return Verdict::Holds;
}

}  // namespace multisign
