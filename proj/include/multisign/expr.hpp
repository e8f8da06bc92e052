#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "multisign/structures.hpp"

namespace multisign {

/// Half-open byte range [begin, end) into the parsed input.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

/// Sign-count declaration: a single count (scalar mode) or one count per
/// tuple slot (tuple mode). Supplied out-of-band, never in the literal.
struct Shape {
    Shape(int signs_count);  // implicit: scalar mode
    explicit Shape(std::vector<int> per_slot);

    bool is_scalar() const noexcept { return counts.size() == 1; }

    std::vector<int> counts;
};

/**
 * Expression tree over multisign literals. The tree records exactly the
 * grouping the grammar produced; no algebraic rewriting happens at parse
 * time, which matters because addition is not associative in general.
 */
class Expr {
public:
    enum class Kind { Literal, Tuple, Add, Mul };

    static Expr literal(MultisignNumber value, SourceSpan span = {});
    static Expr tuple(std::vector<Expr> elements, SourceSpan span = {});
    static Expr add(Expr lhs, Expr rhs, SourceSpan span = {});
    static Expr mul(Expr lhs, Expr rhs, SourceSpan span = {});

    Kind kind() const noexcept { return kind_; }
    const MultisignNumber& literal_value() const { return *literal_; }
    const std::vector<Expr>& children() const noexcept { return children_; }
    const Expr& lhs() const { return children_[0]; }
    const Expr& rhs() const { return children_[1]; }
    SourceSpan span() const noexcept { return span_; }

private:
    Expr(Kind kind, SourceSpan span) : kind_(kind), span_(span) {}

    Kind kind_;
    SourceSpan span_;
    std::optional<MultisignNumber> literal_;
    std::vector<Expr> children_;
};

/// Result of evaluating an expression.
using Value = std::variant<MultisignNumber, MultisignTuple>;

/// Parses an expression. Grammar (whitespace free between tokens):
///
///   expr      := term (('+' | circled-plus) term)*
///   term      := factor (('*' | circled-times) factor)*
///   factor    := literal | '(' expr ')' | tuple
///   tuple     := '(' expr (',' expr)+ ')'
///   literal   := '^' digits ws? (magnitude | '(' magnitude ')') | '0'
///   magnitude := digits | digits '/' digits | digits '.' digits
///
/// Both operators are left-associative and '*' binds tighter than '+'.
/// In scalar mode every literal gets the declared sign count and tuple
/// literals are rejected; in tuple mode the top level must be built from
/// tuple literals whose arity matches the shape, slot t using counts[t].
Expr parse(std::string_view text, const Shape& shape);

/// Bottom-up evaluation honoring the recorded grouping exactly.
Value eval(const Expr& e);

std::string format(const MultisignNumber& v);
std::string format(const MultisignTuple& v);
std::string format(const Value& v);

/// Minimal-parentheses rendering; reparsing yields the same tree.
std::string format(const Expr& e);

/// Structural order over values for deterministic reporting.
struct ValueCanonicalLess {
    bool operator()(const Value& a, const Value& b) const;
};

struct SensitivityReport {
    struct Witness {
        std::string grouping;  // fully parenthesized rendering
        Value value;
    };

    std::vector<Value> distinct_values;  // canonically ordered
    bool is_sensitive = false;           // true iff distinct_values.size() > 1
    std::vector<Witness> witnesses;      // two differing groupings when sensitive
};

/// Enumerates every grouping of each maximal addition chain
/// (multiplication is fully associative, so its chains are left alone),
/// evaluates them all, and collects the distinct results. Chains longer
/// than max_chain_operands throw ChainTooLong.
SensitivityReport grouping_sensitivity(const Expr& e, std::size_t max_chain_operands = 12);

}  // namespace multisign
