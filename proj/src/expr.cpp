#include "multisign/expr.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace multisign {

Shape::Shape(int signs_count) : counts{signs_count} {
    if (signs_count < 1) {
        throw SignOutOfRange("shape requires at least one sign per slot");
    }
}

Shape::Shape(std::vector<int> per_slot) : counts(std::move(per_slot)) {
    if (counts.empty()) {
        throw ShapeMismatch("shape must have at least one slot");
    }
    for (int s : counts) {
        if (s < 1) {
            throw SignOutOfRange("shape requires at least one sign per slot");
        }
    }
}

Expr Expr::literal(MultisignNumber value, SourceSpan span) {
    Expr e(Kind::Literal, span);
    e.literal_ = std::move(value);
    return e;
}

Expr Expr::tuple(std::vector<Expr> elements, SourceSpan span) {
    Expr e(Kind::Tuple, span);
    e.children_ = std::move(elements);
    return e;
}

Expr Expr::add(Expr lhs, Expr rhs, SourceSpan span) {
    Expr e(Kind::Add, span);
    e.children_.push_back(std::move(lhs));
    e.children_.push_back(std::move(rhs));
    return e;
}

Expr Expr::mul(Expr lhs, Expr rhs, SourceSpan span) {
    Expr e(Kind::Mul, span);
    e.children_.push_back(std::move(lhs));
    e.children_.push_back(std::move(rhs));
    return e;
}

namespace {

constexpr std::string_view kPlusSign = "\xE2\x8A\x95";   // circled plus
constexpr std::string_view kTimesSign = "\xE2\x8A\x97";  // circled times

// Phase 1: build a tree with unresolved literals. Sign counts are only
// assigned afterwards, because whether "(" opens a tuple or a grouping
// is unknown until a comma (or the closing paren) is seen.
struct RawNode {
    enum class Kind { Literal, Zero, Tuple, Add, Mul };

    Kind kind{};
    long long sign = 0;   // Literal
    Magnitude magnitude;  // Literal
    std::vector<RawNode> kids;
    SourceSpan span;
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RawNode parse_input() {
        RawNode e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) {
            throw SyntaxError("unexpected trailing input", pos_);
        }
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool eat_seq(std::string_view seq) {
        skip_ws();
        if (text_.substr(pos_, seq.size()) == seq) {
            pos_ += seq.size();
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) {
            throw SyntaxError(std::string("expected ") + what, pos_);
        }
    }

    RawNode parse_expr() {
        RawNode lhs = parse_term();
        while (eat('+') || eat_seq(kPlusSign)) {
            RawNode rhs = parse_term();
            RawNode node;
            node.kind = RawNode::Kind::Add;
            node.span = {lhs.span.begin, rhs.span.end};
            node.kids.push_back(std::move(lhs));
            node.kids.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    RawNode parse_term() {
        RawNode lhs = parse_factor();
        while (eat('*') || eat_seq(kTimesSign)) {
            RawNode rhs = parse_factor();
            RawNode node;
            node.kind = RawNode::Kind::Mul;
            node.span = {lhs.span.begin, rhs.span.end};
            node.kids.push_back(std::move(lhs));
            node.kids.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    RawNode parse_factor() {
        skip_ws();
        if (pos_ >= text_.size()) {
            throw SyntaxError("expected a literal or '('", pos_);
        }
        const char c = text_[pos_];
        if (c == '^') return parse_sign_literal();
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_zero_literal();
        if (c == '(') return parse_parenthesized();
        throw SyntaxError("expected a literal or '('", pos_);
    }

    RawNode parse_sign_literal() {
        const std::size_t start = pos_;
        ++pos_;  // '^'
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw SyntaxError("expected sign digits after '^'", pos_);
        }
        long long sign = 0;
        bool oversized = false;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (sign > 1'000'000'000'000LL) {
                oversized = true;  // certainly beyond any sign count
            } else {
                sign = sign * 10 + (text_[pos_] - '0');
            }
            ++pos_;
        }
        skip_ws();
        Magnitude magnitude;
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            skip_ws();
            magnitude = Magnitude::parse_prefix(text_, pos_);
            expect(')', "')' after parenthesized magnitude");
        } else {
            magnitude = Magnitude::parse_prefix(text_, pos_);
        }
        RawNode node;
        node.kind = RawNode::Kind::Literal;
        node.sign = oversized ? -1 : sign;  // -1 marks "too large to matter"
        node.magnitude = std::move(magnitude);
        node.span = {start, pos_};
        return node;
    }

    RawNode parse_zero_literal() {
        const std::size_t start = pos_;
        (void)Magnitude::parse_prefix(text_, pos_);
        if (pos_ - start != 1 || text_[start] != '0') {
            throw SyntaxError("a bare magnitude needs a '^' sign; only '0' stands alone",
                              start);
        }
        RawNode node;
        node.kind = RawNode::Kind::Zero;
        node.span = {start, pos_};
        return node;
    }

    RawNode parse_parenthesized() {
        const std::size_t start = pos_;
        expect('(', "'('");
        std::vector<RawNode> elems;
        elems.push_back(parse_expr());
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
            while (eat(',')) {
                elems.push_back(parse_expr());
            }
            expect(')', "')' after tuple elements");
            RawNode node;
            node.kind = RawNode::Kind::Tuple;
            node.kids = std::move(elems);
            node.span = {start, pos_};
            return node;
        }
        expect(')', "')' or ','");
        return std::move(elems.front());  // plain grouping parentheses
    }
};

std::string at_byte(const SourceSpan& span) {
    return " (at byte " + std::to_string(span.begin) + ")";
}

// Phase 2: assign sign counts and build canonical literals.
Expr resolve_scalar(const RawNode& n, int signs_count) {
    switch (n.kind) {
        case RawNode::Kind::Zero:
            return Expr::literal(MultisignNumber::zero(signs_count), n.span);
        case RawNode::Kind::Literal: {
            if (n.sign < 0 || n.sign > signs_count) {
                throw SignOutOfRange("sign index exceeds the declared " +
                                     std::to_string(signs_count) + " signs" +
                                     at_byte(n.span));
            }
            if (n.sign == 0 && !n.magnitude.is_zero()) {
                throw ZeroSignNonzeroMagnitude(
                    "sign 0 is reserved for the additive identity" + at_byte(n.span));
            }
            return Expr::literal(
                MultisignNumber::make(signs_count, static_cast<int>(n.sign), n.magnitude),
                n.span);
        }
        case RawNode::Kind::Tuple:
            throw ShapeMismatch("tuple literal in a scalar context" + at_byte(n.span));
        case RawNode::Kind::Add:
            return Expr::add(resolve_scalar(n.kids[0], signs_count),
                             resolve_scalar(n.kids[1], signs_count), n.span);
        case RawNode::Kind::Mul:
            return Expr::mul(resolve_scalar(n.kids[0], signs_count),
                             resolve_scalar(n.kids[1], signs_count), n.span);
    }
    throw Error("unreachable raw node kind");
}

Expr resolve_tuple(const RawNode& n, const Shape& shape) {
    switch (n.kind) {
        case RawNode::Kind::Add:
            return Expr::add(resolve_tuple(n.kids[0], shape),
                             resolve_tuple(n.kids[1], shape), n.span);
        case RawNode::Kind::Mul:
            return Expr::mul(resolve_tuple(n.kids[0], shape),
                             resolve_tuple(n.kids[1], shape), n.span);
        case RawNode::Kind::Tuple: {
            if (n.kids.size() != shape.counts.size()) {
                throw ShapeMismatch("tuple literal has " + std::to_string(n.kids.size()) +
                                    " elements but the declared shape has " +
                                    std::to_string(shape.counts.size()) + at_byte(n.span));
            }
            std::vector<Expr> elems;
            elems.reserve(n.kids.size());
            for (std::size_t t = 0; t < n.kids.size(); ++t) {
                elems.push_back(resolve_scalar(n.kids[t], shape.counts[t]));
            }
            return Expr::tuple(std::move(elems), n.span);
        }
        default:
            throw ShapeMismatch("scalar expression where the declared shape is a tuple" +
                                at_byte(n.span));
    }
}

}  // namespace

Expr parse(std::string_view text, const Shape& shape) {
    RawNode raw = Parser(text).parse_input();
    if (shape.is_scalar()) {
        return resolve_scalar(raw, shape.counts.front());
    }
    return resolve_tuple(raw, shape);
}

Value eval(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::Literal:
            return e.literal_value();
        case Expr::Kind::Tuple: {
            std::vector<MultisignNumber> slots;
            slots.reserve(e.children().size());
            for (const Expr& kid : e.children()) {
                Value v = eval(kid);
                if (!std::holds_alternative<MultisignNumber>(v)) {
                    throw ShapeMismatch("tuple element evaluated to a tuple");
                }
                slots.push_back(std::get<MultisignNumber>(std::move(v)));
            }
            return MultisignTuple(std::move(slots));
        }
        case Expr::Kind::Add:
        case Expr::Kind::Mul: {
            Value l = eval(e.lhs());
            Value r = eval(e.rhs());
            const bool is_add = e.kind() == Expr::Kind::Add;
            if (std::holds_alternative<MultisignNumber>(l) &&
                std::holds_alternative<MultisignNumber>(r)) {
                const auto& a = std::get<MultisignNumber>(l);
                const auto& b = std::get<MultisignNumber>(r);
                return is_add ? add(a, b) : mul(a, b);
            }
            if (std::holds_alternative<MultisignTuple>(l) &&
                std::holds_alternative<MultisignTuple>(r)) {
                const auto& a = std::get<MultisignTuple>(l);
                const auto& b = std::get<MultisignTuple>(r);
                return is_add ? tuple_add(a, b) : tuple_mul(a, b);
            }
            throw ShapeMismatch("cannot combine a scalar with a tuple");
        }
    }
    throw Error("unreachable expression kind");
}

std::string format(const MultisignNumber& v) {
    return v.str();
}

std::string format(const MultisignTuple& v) {
    return v.str();
}

std::string format(const Value& v) {
    return std::visit([](const auto& inner) { return inner.str(); }, v);
}

namespace {

int precedence(Expr::Kind kind) {
    switch (kind) {
        case Expr::Kind::Add: return 1;
        case Expr::Kind::Mul: return 2;
        default: return 3;
    }
}

void format_expr(const Expr& e, int parent_prec, bool right_child, std::string& out) {
    const int prec = precedence(e.kind());
    switch (e.kind()) {
        case Expr::Kind::Literal:
            out += e.literal_value().str();
            return;
        case Expr::Kind::Tuple: {
            out += "(";
            for (std::size_t t = 0; t < e.children().size(); ++t) {
                if (t > 0) out += ", ";
                format_expr(e.children()[t], 0, false, out);
            }
            out += ")";
            return;
        }
        case Expr::Kind::Add:
        case Expr::Kind::Mul: {
            // Left-associative grammar: parens are needed under a tighter
            // operator, or on the right-hand side of an equal one.
            const bool parens = prec < parent_prec || (prec == parent_prec && right_child);
            if (parens) out += "(";
            format_expr(e.lhs(), prec, false, out);
            out += e.kind() == Expr::Kind::Add ? " + " : " * ";
            format_expr(e.rhs(), prec, true, out);
            if (parens) out += ")";
            return;
        }
    }
}

}  // namespace

std::string format(const Expr& e) {
    std::string out;
    format_expr(e, 0, false, out);
    return out;
}

bool ValueCanonicalLess::operator()(const Value& a, const Value& b) const {
    if (a.index() != b.index()) return a.index() < b.index();
    if (std::holds_alternative<MultisignNumber>(a)) {
        return CanonicalLess{}(std::get<MultisignNumber>(a), std::get<MultisignNumber>(b));
    }
    return TupleCanonicalLess{}(std::get<MultisignTuple>(a), std::get<MultisignTuple>(b));
}

namespace {

struct Outcome {
    Value value;
    std::string grouping;
};

void push_deduped(std::vector<Outcome>& outcomes, Outcome candidate) {
    for (const Outcome& existing : outcomes) {
        if (existing.value == candidate.value) return;
    }
    outcomes.push_back(std::move(candidate));
}

Value apply_value(Expr::Kind op, const Value& l, const Value& r) {
    if (std::holds_alternative<MultisignNumber>(l)) {
        const auto& a = std::get<MultisignNumber>(l);
        const auto& b = std::get<MultisignNumber>(r);
        return op == Expr::Kind::Add ? add(a, b) : mul(a, b);
    }
    const auto& a = std::get<MultisignTuple>(l);
    const auto& b = std::get<MultisignTuple>(r);
    return op == Expr::Kind::Add ? tuple_add(a, b) : tuple_mul(a, b);
}

void flatten_add_chain(const Expr& e, std::vector<const Expr*>& operands) {
    if (e.kind() == Expr::Kind::Add) {
        flatten_add_chain(e.lhs(), operands);
        flatten_add_chain(e.rhs(), operands);
    } else {
        operands.push_back(&e);
    }
}

std::vector<Outcome> enumerate_groupings(const Expr& e, std::size_t max_chain);

std::vector<Outcome> enumerate_add_chain(const Expr& e, std::size_t max_chain) {
    std::vector<const Expr*> operands;
    flatten_add_chain(e, operands);
    if (operands.size() > max_chain) {
        throw ChainTooLong("addition chain has " + std::to_string(operands.size()) +
                           " operands; the grouping enumeration limit is " +
                           std::to_string(max_chain));
    }
    const std::size_t n = operands.size();
    // Interval table over chain slices; deduplicating by value keeps the
    // enumeration polynomial while preserving every reachable result.
    std::vector<std::vector<std::vector<Outcome>>> table(
        n, std::vector<std::vector<Outcome>>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        table[i][i + 1] = enumerate_groupings(*operands[i], max_chain);
    }
    for (std::size_t len = 2; len <= n; ++len) {
        for (std::size_t i = 0; i + len <= n; ++i) {
            const std::size_t j = i + len;
            auto& cell = table[i][j];
            // Split points run right to left so the default left-leaning
            // grouping is discovered (and reported as a witness) first.
            for (std::size_t k = j - 1; k > i; --k) {
                for (const Outcome& l : table[i][k]) {
                    for (const Outcome& r : table[k][j]) {
                        push_deduped(cell, {apply_value(Expr::Kind::Add, l.value, r.value),
                                            "(" + l.grouping + " + " + r.grouping + ")"});
                    }
                }
            }
        }
    }
    return table[0][n];
}

std::vector<Outcome> enumerate_groupings(const Expr& e, std::size_t max_chain) {
    switch (e.kind()) {
        case Expr::Kind::Literal:
            return {{Value(e.literal_value()), e.literal_value().str()}};
        case Expr::Kind::Tuple: {
            std::vector<std::pair<std::vector<MultisignNumber>, std::string>> partial;
            partial.push_back({{}, ""});
            for (const Expr& kid : e.children()) {
                const auto kid_outcomes = enumerate_groupings(kid, max_chain);
                std::vector<std::pair<std::vector<MultisignNumber>, std::string>> next;
                for (const auto& p : partial) {
                    for (const Outcome& o : kid_outcomes) {
                        auto slots = p.first;
                        slots.push_back(std::get<MultisignNumber>(o.value));
                        std::string rendering =
                            p.second.empty() ? o.grouping : p.second + ", " + o.grouping;
                        next.push_back({std::move(slots), std::move(rendering)});
                    }
                }
                partial = std::move(next);
            }
            std::vector<Outcome> outcomes;
            for (auto& p : partial) {
                push_deduped(outcomes,
                             {Value(MultisignTuple(std::move(p.first))), "(" + p.second + ")"});
            }
            return outcomes;
        }
        case Expr::Kind::Mul: {
            const auto left = enumerate_groupings(e.lhs(), max_chain);
            const auto right = enumerate_groupings(e.rhs(), max_chain);
            std::vector<Outcome> outcomes;
            for (const Outcome& l : left) {
                for (const Outcome& r : right) {
                    push_deduped(outcomes, {apply_value(Expr::Kind::Mul, l.value, r.value),
                                            "(" + l.grouping + " * " + r.grouping + ")"});
                }
            }
            return outcomes;
        }
        case Expr::Kind::Add:
            return enumerate_add_chain(e, max_chain);
    }
    throw Error("unreachable expression kind");
}

}  // namespace

SensitivityReport grouping_sensitivity(const Expr& e, std::size_t max_chain_operands) {
    const auto outcomes = enumerate_groupings(e, max_chain_operands);
    SensitivityReport report;
    report.distinct_values.reserve(outcomes.size());
    for (const Outcome& o : outcomes) {
        report.distinct_values.push_back(o.value);
    }
    std::sort(report.distinct_values.begin(), report.distinct_values.end(),
              ValueCanonicalLess{});
    report.is_sensitive = report.distinct_values.size() > 1;
    if (report.is_sensitive) {
        report.witnesses.push_back({outcomes.front().grouping, outcomes.front().value});
        for (std::size_t i = 1; i < outcomes.size(); ++i) {
            if (!(outcomes[i].value == outcomes.front().value)) {
                report.witnesses.push_back({outcomes[i].grouping, outcomes[i].value});
                break;
            }
        }
    }
    return report;
}

}  // namespace multisign
