#include "multisign/cli.hpp"

#include <charconv>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "multisign/expr.hpp"

namespace multisign::cli {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t next = text.find(sep, start);
        parts.push_back(text.substr(start, next - start));
        if (next == std::string::npos) break;
        start = next + 1;
    }
    return parts;
}

Shape parse_shape(const std::string& text) {
    std::vector<int> counts;
    for (const std::string& part : split(text, ',')) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size()) {
            throw SyntaxError("invalid sign count '" + part + "' in --signs", 0);
        }
        counts.push_back(value);
    }
    if (counts.size() == 1) return Shape(counts.front());
    return Shape(std::move(counts));
}

std::vector<Magnitude> parse_mags(const std::string& text) {
    std::vector<Magnitude> mags;
    for (const std::string& part : split(text, ',')) {
        mags.push_back(Magnitude::parse(part));
    }
    return mags;
}

int scalar_signs(const Shape& shape, const char* command) {
    if (!shape.is_scalar()) {
        throw ShapeMismatch(std::string(command) + " requires a scalar --signs value");
    }
    return shape.counts.front();
}

json shape_json(const Shape& shape) {
    return json(shape.counts);
}

json sensitivity_json(const SensitivityReport& report) {
    json values = json::array();
    for (const Value& v : report.distinct_values) values.push_back(format(v));
    json witnesses = json::array();
    for (const auto& w : report.witnesses) {
        witnesses.push_back({{"grouping", w.grouping}, {"value", format(w.value)}});
    }
    return {{"is_sensitive", report.is_sensitive},
            {"distinct_values", values},
            {"witnesses", witnesses}};
}

void print_sensitivity_text(const SensitivityReport& report, std::ostream& out) {
    out << "grouping-sensitive: " << (report.is_sensitive ? "yes" : "no") << "\n";
    if (!report.is_sensitive) return;
    out << "values:";
    for (std::size_t i = 0; i < report.distinct_values.size(); ++i) {
        out << (i == 0 ? " " : ", ") << format(report.distinct_values[i]);
    }
    out << "\n";
    for (const auto& w : report.witnesses) {
        out << "grouping " << w.grouping << " = " << format(w.value) << "\n";
    }
}

json report_json(const LawOutcome& outcome, const Domain& dom) {
    json j;
    j["law"] = std::string(law_name(outcome.law));
    if (!outcome.error.empty()) {
        j["error"] = outcome.error;
        return j;
    }
    const LawReport& report = *outcome.report;
    const Verdict expected = expected_verdict(outcome.law, dom);
    j["verdict"] = std::string(verdict_name(report.verdict));
    j["expected"] = std::string(verdict_name(expected));
    j["matches_expected"] = report.verdict == expected;
    j["cases_checked"] = report.cases_checked;
    j["counterexample_total"] = report.counterexample_total;
    json cxs = json::array();
    for (const Counterexample& cx : report.counterexamples) {
        json operands = json::array();
        for (const auto& operand : cx.operands) operands.push_back(operand.str());
        cxs.push_back({{"operands", operands},
                       {"left", cx.left},
                       {"right", cx.right},
                       {"context", cx.context}});
    }
    j["counterexamples"] = cxs;
    return j;
}

void print_report_text(const LawOutcome& outcome, const Domain& dom, std::ostream& out) {
    out << law_name(outcome.law) << ": ";
    if (!outcome.error.empty()) {
        out << "error: " << outcome.error << "\n";
        return;
    }
    const LawReport& report = *outcome.report;
    const Verdict expected = expected_verdict(outcome.law, dom);
    out << verdict_name(report.verdict) << " (cases=" << report.cases_checked;
    if (report.counterexample_total > 0) {
        out << ", counterexamples=" << report.counterexample_total << " shown "
            << report.counterexamples.size();
    }
    out << ") [expected " << verdict_name(expected) << "]\n";
    for (const Counterexample& cx : report.counterexamples) {
        out << "  (";
        for (std::size_t i = 0; i < cx.operands.size(); ++i) {
            if (i > 0) out << ", ";
            out << cx.operands[i].str();
        }
        out << "): left = " << cx.left << ", right = " << cx.right;
        if (!cx.context.empty()) out << "  [" << cx.context << "]";
        out << "\n";
    }
}

struct Options {
    std::string signs_text;
    std::string output_mode = "text";

    std::string expression;
    bool sensitivity = false;

    std::string literal;
    bool additive = false;
    bool multiplicative = false;

    std::string a_text;
    std::string b_text;

    std::string mags_text = "0,1/2,1,2";
    std::vector<std::string> only_laws;
    unsigned long long budget = 2'000'000;
    std::size_t cap = 10;

    std::string to_signed_text;
    std::string from_signed_text;
};

int cmd_eval(const Options& opt, std::ostream& out) {
    const Shape shape = parse_shape(opt.signs_text);
    const Expr expr = parse(opt.expression, shape);
    const Value result = eval(expr);
    if (opt.output_mode == "structured") {
        json j{{"command", "eval"},
               {"signs", shape_json(shape)},
               {"expression", opt.expression},
               {"result", format(result)}};
        if (opt.sensitivity) {
            j["sensitivity"] = sensitivity_json(grouping_sensitivity(expr));
        }
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    out << format(result) << "\n";
    if (opt.sensitivity) {
        print_sensitivity_text(grouping_sensitivity(expr), out);
    }
    return exit_ok;
}

int cmd_inverses(const Options& opt, std::ostream& out) {
    const Shape shape = parse_shape(opt.signs_text);
    const Expr expr = parse(opt.literal, shape);
    const Value value = eval(expr);
    const char* kind = opt.additive ? "additive" : "multiplicative";
    std::vector<std::string> rendered;
    if (std::holds_alternative<MultisignNumber>(value)) {
        const auto& x = std::get<MultisignNumber>(value);
        if (opt.additive) {
            for (const auto& y : additive_inverses(x).solutions) rendered.push_back(y.str());
        } else {
            rendered.push_back(mul_inverse(x).str());
        }
    } else {
        const auto& t = std::get<MultisignTuple>(value);
        if (opt.additive) {
            for (const auto& u : tuple_additive_inverses(t)) rendered.push_back(u.str());
        } else {
            rendered.push_back(tuple_mul_inverse(t).str());
        }
    }
    if (opt.output_mode == "structured") {
        json j{{"command", "inverses"},
               {"kind", kind},
               {"signs", shape_json(shape)},
               {"input", opt.literal},
               {"inverses", rendered},
               {"complete", true}};
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    for (const std::string& line : rendered) out << line << "\n";
    return exit_ok;
}

int cmd_solve(const Options& opt, std::ostream& out) {
    const Shape shape = parse_shape(opt.signs_text);
    const int signs = scalar_signs(shape, "solve");
    const auto read = [&](const std::string& text) {
        Value v = eval(parse(text, Shape(signs)));
        return std::get<MultisignNumber>(v);
    };
    const MultisignNumber a = read(opt.a_text);
    const MultisignNumber b = read(opt.b_text);
    const SolutionSet solutions = solve_linear(a, b);
    for (const auto& x : solutions.solutions) {
        if (!add(mul(x, a), b).is_zero()) {
            throw Error("internal error: solution " + x.str() + " fails substitution");
        }
    }
    if (opt.output_mode == "structured") {
        json rendered = json::array();
        for (const auto& x : solutions.solutions) rendered.push_back(x.str());
        json j{{"command", "solve"},
               {"signs", shape_json(shape)},
               {"a", opt.a_text},
               {"b", opt.b_text},
               {"solutions", rendered},
               {"complete", solutions.complete}};
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    for (const auto& x : solutions.solutions) out << x.str() << "\n";
    return exit_ok;
}

int cmd_laws(const Options& opt, std::ostream& out) {
    const Shape shape = parse_shape(opt.signs_text);
    const int signs = scalar_signs(shape, "laws");
    const Domain dom(signs, parse_mags(opt.mags_text));

    std::vector<LawId> laws;
    if (opt.only_laws.empty()) {
        laws = all_laws(signs);
    } else {
        for (const std::string& name : opt.only_laws) {
            const auto law = law_from_name(name);
            if (!law) {
                throw SemanticError("unknown law '" + name + "'");
            }
            laws.push_back(*law);
        }
    }

    CheckOptions check_opt;
    check_opt.budget = opt.budget;
    check_opt.counterexample_cap = opt.cap;
    const auto outcomes = run_law_suite(dom, laws, check_opt);
    const int code = laws_exit_code(outcomes, dom);

    if (opt.output_mode == "structured") {
        json mags = json::array();
        for (const Magnitude& m : dom.magnitudes) mags.push_back(m.str());
        json reports = json::array();
        for (const LawOutcome& outcome : outcomes) reports.push_back(report_json(outcome, dom));
        json j{{"command", "laws"},
               {"signs", signs},
               {"magnitudes", mags},
               {"budget", opt.budget},
               {"counterexample_cap", opt.cap},
               {"reports", reports},
               {"all_match_expected", code == exit_ok}};
        out << j.dump(2) << "\n";
        return code;
    }
    for (const LawOutcome& outcome : outcomes) print_report_text(outcome, dom, out);
    switch (code) {
        case exit_ok:
            out << "verdict-check: all laws match the expected table\n";
            break;
        case exit_budget:
            out << "verdict-check: budget exceeded\n";
            break;
        case exit_law_mismatch:
            out << "verdict-check: MISMATCH against the expected table\n";
            break;
        default:
            out << "verdict-check: errors occurred\n";
            break;
    }
    return code;
}

int cmd_convert(const Options& opt, std::ostream& out) {
    const Shape shape = parse_shape(opt.signs_text);
    const int signs = scalar_signs(shape, "convert");
    if (signs != 2) {
        throw WrongSignCount("convert requires --signs 2, got " + std::to_string(signs));
    }
    std::string direction;
    std::string input;
    std::string result;
    if (!opt.to_signed_text.empty()) {
        direction = "to-signed";
        input = opt.to_signed_text;
        const Value v = eval(parse(input, Shape(2)));
        result = to_signed(std::get<MultisignNumber>(v)).str();
    } else {
        direction = "from-signed";
        input = opt.from_signed_text;
        result = from_signed(SignedRational::parse(input)).str();
    }
    if (opt.output_mode == "structured") {
        json j{{"command", "convert"},
               {"direction", direction},
               {"signs", shape_json(shape)},
               {"input", input},
               {"result", result}};
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    out << result << "\n";
    return exit_ok;
}

}  // namespace

int laws_exit_code(const std::vector<LawOutcome>& outcomes, const Domain& dom) {
    bool budget_exceeded = false;
    bool other_error = false;
    bool mismatch = false;
    for (const LawOutcome& outcome : outcomes) {
        if (outcome.budget_exceeded) {
            budget_exceeded = true;
        } else if (!outcome.error.empty()) {
            other_error = true;
        } else if (outcome.report->verdict != expected_verdict(outcome.law, dom)) {
            mismatch = true;
        }
    }
    if (budget_exceeded) return exit_budget;
    if (other_error) return exit_semantic;
    if (mismatch) return exit_law_mismatch;
    return exit_ok;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"exact multisign arithmetic: evaluation, inverses, equation solving, "
                 "law verification and two-sign conversion"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--signs", opt.signs_text,
                   "sign count s, or comma-separated per-slot counts for tuples")
        ->required();
    app.add_option("--output", opt.output_mode, "output mode")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    eval_cmd->add_option("expression", opt.expression, "expression text")->required();
    eval_cmd->add_flag("--sensitivity", opt.sensitivity,
                       "also report grouping sensitivity of '+' chains");

    auto* inverses_cmd = app.add_subcommand("inverses", "enumerate inverses of a literal");
    auto* additive_flag = inverses_cmd->add_flag("--additive", opt.additive);
    inverses_cmd->add_flag("--multiplicative", opt.multiplicative)->excludes(additive_flag);
    inverses_cmd->add_option("literal", opt.literal, "value literal")->required();

    auto* solve_cmd = app.add_subcommand("solve", "solve x * a + b = 0");
    solve_cmd->add_option("--a", opt.a_text, "nonzero coefficient literal")->required();
    solve_cmd->add_option("--b", opt.b_text, "constant literal")->required();

    auto* laws_cmd = app.add_subcommand("laws", "run the law suite and compare verdicts "
                                                "against the expected table");
    laws_cmd->add_option("--mags", opt.mags_text, "comma-separated magnitude grid")
        ->capture_default_str();
    laws_cmd->add_option("--only", opt.only_laws, "restrict to the named laws");
    laws_cmd->add_option("--budget", opt.budget, "max operand tuples per law sweep")
        ->envname("MULTISIGN_TRIPLE_BUDGET")
        ->capture_default_str();
    laws_cmd->add_option("--cap", opt.cap, "max counterexamples reported per law")
        ->capture_default_str();

    auto* convert_cmd = app.add_subcommand("convert", "map between the two-sign carrier "
                                                      "and signed rationals");
    auto* to_opt = convert_cmd->add_option("--to-signed", opt.to_signed_text,
                                           "two-sign literal to convert");
    convert_cmd->add_option("--from-signed", opt.from_signed_text, "signed rational to convert")
        ->excludes(to_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_syntax;
    }

    try {
        if (app.got_subcommand(eval_cmd)) return cmd_eval(opt, out);
        if (app.got_subcommand(inverses_cmd)) {
            if (opt.additive == opt.multiplicative) {
                err << "inverses requires exactly one of --additive or --multiplicative\n";
                return exit_syntax;
            }
            return cmd_inverses(opt, out);
        }
        if (app.got_subcommand(solve_cmd)) return cmd_solve(opt, out);
        if (app.got_subcommand(laws_cmd)) return cmd_laws(opt, out);
        if (app.got_subcommand(convert_cmd)) {
            if (opt.to_signed_text.empty() == opt.from_signed_text.empty()) {
                err << "convert requires exactly one of --to-signed or --from-signed\n";
                return exit_syntax;
            }
            return cmd_convert(opt, out);
        }
        err << "no subcommand selected\n";
        return exit_syntax;
    } catch (const SyntaxError& e) {
        err << "syntax error: " << e.what() << "\n";
        return exit_syntax;
    } catch (const DomainTooLarge& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const SemanticError& e) {
        err << "error: " << e.what() << "\n";
        return exit_semantic;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_semantic;
    }
}

}  // namespace multisign::cli
