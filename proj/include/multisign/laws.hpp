#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multisign/structures.hpp"

namespace multisign {

/**
 * Finite carrier for exhaustive law checks: the zero element plus every
 * ^d m with d in 1..s and m a nonzero grid magnitude. Magnitudes are
 * canonicalized on construction (sorted ascending, deduplicated, 0
 * always present), so identical inputs always yield the same universe
 * and therefore byte-identical reports.
 */
struct Domain {
    Domain(int signs_count, std::vector<Magnitude> magnitudes);

    int signs_count;
    std::vector<Magnitude> magnitudes;

    /// Canonical element order: ^0 0 first, then ascending (sign, magnitude).
    std::vector<MultisignNumber> universe() const;

    bool has_nonzero_magnitude() const;
};

enum class LawId {
    SignedAssocAdd,    // associativity of + on triples with <= 2 distinct sign labels
    IdentityAssocAdd,  // associativity of + on identity-containing triples with 3 distinct labels
    FullAssocAdd,      // associativity of + on all triples (fails for s >= 3)
    FullAssocMul,      // associativity of * on all triples
    CommutAdd,
    CommutMul,
    Distributivity,    // both orientations
    InverseStructure,  // additive inverse counts and the unique multiplicative inverse
    IsomorphismS2,     // two-sign bridge to signed rationals
};

std::string_view law_name(LawId law);
std::optional<LawId> law_from_name(std::string_view name);

/// Every law applicable at the given sign count, in declaration order.
/// The isomorphism law only applies to the two-sign carrier.
std::vector<LawId> all_laws(int signs_count);

enum class Verdict { Holds, Fails };

std::string_view verdict_name(Verdict v);

/// One operand tuple on which two evaluation routes disagreed. The left
/// and right strings are canonical renderings, so re-evaluating the
/// operands through the core operations reproduces them exactly.
struct Counterexample {
    std::vector<MultisignNumber> operands;
    std::string left;
    std::string right;
    std::string context;  // which equation or count disagreed, when not obvious

    bool operator==(const Counterexample&) const = default;
};

struct LawReport {
    LawId law{};
    int signs_count = 0;
    std::size_t magnitude_count = 0;
    unsigned long long cases_checked = 0;
    Verdict verdict = Verdict::Holds;
    std::vector<Counterexample> counterexamples;  // capped; lexicographic discovery order
    unsigned long long counterexample_total = 0;  // uncapped count

    bool operator==(const LawReport&) const = default;
};

struct CheckOptions {
    /// Upper bound on the operand tuples a single check may sweep.
    unsigned long long budget = 2'000'000;
    std::size_t counterexample_cap = 10;
};

LawReport check_signed_associativity_add(const Domain& dom, const CheckOptions& opt = {});
LawReport check_identity_associativity_add(const Domain& dom, const CheckOptions& opt = {});

enum class BinaryOp { Add, Mul };

LawReport check_full_associativity(BinaryOp op, const Domain& dom, const CheckOptions& opt = {});
LawReport check_commutativity(BinaryOp op, const Domain& dom, const CheckOptions& opt = {});

/// Checks x*(y+z) = x*y + x*z and (x+y)*z = x*z + y*z over all triples.
LawReport check_distributivity(const Domain& dom, const CheckOptions& opt = {});

/// Per element: exactly s-1 additive inverses (the identity only
/// itself), and exactly one multiplicative inverse, found by sweeping
/// the universe extended with the exact inverse magnitudes and matching
/// the closed-form sign rule.
LawReport check_inverse_structure(const Domain& dom, const CheckOptions& opt = {});

/// Homomorphism and bijection checks for the two-sign bridge; throws
/// WrongSignCount unless the domain has exactly two signs.
LawReport check_isomorphism_s2(const Domain& dom, const CheckOptions& opt = {});

LawReport run_law(LawId law, const Domain& dom, const CheckOptions& opt = {});

struct LawOutcome {
    LawId law{};
    std::optional<LawReport> report;  // absent when the check errored
    std::string error;                // empty on success
    bool budget_exceeded = false;
};

/// Runs each requested law in order, capturing per-law errors instead of
/// aborting the suite.
std::vector<LawOutcome> run_law_suite(const Domain& dom, const std::vector<LawId>& laws,
                                      const CheckOptions& opt = {});

/// The verdict each law must produce on a given domain: full
/// associativity of + fails whenever s >= 3 and the grid holds a
/// nonzero magnitude; every other entry holds.
Verdict expected_verdict(LawId law, const Domain& dom);

}  // namespace multisign
