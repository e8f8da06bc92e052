#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "multisign/cli.hpp"

using multisign::Domain;
using multisign::LawId;
using multisign::LawOutcome;
using multisign::LawReport;
using multisign::Magnitude;
using multisign::Verdict;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"msign"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out;
    std::ostringstream err;
    const int code =
        multisign::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval reproduces the worked examples") {
    CHECK(run_cli({"--signs", "3", "eval", "^1 1 + ^3 1"}).out == "0\n");
    CHECK(run_cli({"--signs", "2", "eval", "^1 2 * ^2 3"}).out == "^2 6\n");
    CHECK(run_cli({"--signs", "2", "eval", "^1 2 * ^1 1/2"}).out == "^1 1\n");
    CHECK(run_cli({"--signs", "3", "eval", "^1 1 + ^3 1"}).code == 0);

    const auto tuple = run_cli({"--signs", "3,4", "eval", "(^1 1, ^2 2) + (^2 1, ^2 1)"});
    CHECK(tuple.code == 0);
    CHECK(tuple.out == "(0, ^2 3)\n");
}

TEST_CASE("eval sensitivity flag") {
    const auto r = run_cli({"--signs", "3", "eval", "--sensitivity", "^1 1 + ^2 1 + ^3 1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("^3 1\n") == 0);
    CHECK(r.out.find("grouping-sensitive: yes") != std::string::npos);
    CHECK(r.out.find("^1 1") != std::string::npos);

    const auto quiet = run_cli({"--signs", "2", "eval", "--sensitivity", "^1 1 + ^2 1 + ^1 2"});
    CHECK(quiet.out.find("grouping-sensitive: no") != std::string::npos);
}

TEST_CASE("help and bare invocation") {
    const auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("eval") != std::string::npos);
    CHECK(run_cli({}).code == 2);  // a subcommand is required
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"--signs", "3", "eval", "^1 1 +"}).code == 2);         // syntax
    CHECK(run_cli({"--signs", "3", "eval", "^4 1"}).code == 3);           // semantic
    CHECK(run_cli({"--signs", "3", "inverses", "--multiplicative", "0"}).code == 3);
    CHECK(run_cli({"--signs", "3", "solve", "--a", "0", "--b", "^1 1"}).code == 3);
    CHECK(run_cli({"--signs", "3", "convert", "--to-signed", "^1 1"}).code == 3);
    CHECK(run_cli({"--signs", "5", "laws", "--mags", "0,1,2,3,4,5,6,7", "--budget", "10"})
              .code == 5);
    CHECK(run_cli({"--signs", "3", "nonsense"}).code == 2);               // CLI usage
    CHECK(run_cli({"eval", "^1 1"}).code == 2);                           // missing --signs
    CHECK(run_cli({"--signs", "0", "eval", "0"}).code == 3);
    CHECK(run_cli({"--signs", "x", "eval", "0"}).code == 2);
    CHECK(run_cli({"--signs", "3", "inverses", "^1 1"}).code == 2);       // kind missing
    CHECK(run_cli({"--signs", "2", "convert"}).code == 2);                // direction missing
    CHECK(run_cli({"--signs", "3", "laws", "--only", "no-such-law"}).code == 3);
    CHECK(run_cli({"--signs", "3,4", "solve", "--a", "^1 1", "--b", "0"}).code == 3);
}

TEST_CASE("inverses command") {
    CHECK(run_cli({"--signs", "3", "inverses", "--additive", "^1 1"}).out == "^2 1\n^3 1\n");
    CHECK(run_cli({"--signs", "3", "inverses", "--multiplicative", "^2 4"}).out == "^3 1/4\n");
    CHECK(run_cli({"--signs", "5", "inverses", "--additive", "0"}).out == "0\n");
    CHECK(run_cli({"--signs", "3,3", "inverses", "--multiplicative", "(^2 2, ^3 1)"}).out ==
          "(^3 1/2, ^2 1)\n");
    const auto tuple_adds =
        run_cli({"--signs", "3,3", "inverses", "--additive", "(^1 1, ^1 1)"});
    CHECK(tuple_adds.out ==
          "(^2 1, ^2 1)\n(^2 1, ^3 1)\n(^3 1, ^2 1)\n(^3 1, ^3 1)\n");
}

TEST_CASE("solve command") {
    CHECK(run_cli({"--signs", "3", "solve", "--a", "^1 2", "--b", "^1 2"}).out ==
          "^2 1\n^3 1\n");
    CHECK(run_cli({"--signs", "4", "solve", "--a", "^1 1", "--b", "0"}).out == "0\n");
}

TEST_CASE("convert command") {
    CHECK(run_cli({"--signs", "2", "convert", "--to-signed", "^2 3"}).out == "-3\n");
    CHECK(run_cli({"--signs", "2", "convert", "--from-signed", "0"}).out == "0\n");
    CHECK(run_cli({"--signs", "2", "convert", "--from-signed", "-3/2"}).out == "^2 3/2\n");
    CHECK(run_cli({"--signs", "2", "convert", "--to-signed", "^1 7/2"}).out == "+7/2\n");
}

TEST_CASE("laws command follows the expected table") {
    const auto full = run_cli({"--signs", "3", "laws", "--mags", "0,1,2"});
    CHECK(full.code == 0);
    CHECK(full.out.find("signed-assoc-add: holds") != std::string::npos);
    CHECK(full.out.find("full-assoc-add: fails") != std::string::npos);
    CHECK(full.out.find("full-assoc-mul: holds") != std::string::npos);
    CHECK(full.out.find("verdict-check: all laws match the expected table") !=
          std::string::npos);

    const auto only = run_cli({"--signs", "3", "laws", "--only", "full-assoc-add", "--mags",
                               "0,1"});
    CHECK(only.code == 0);
    CHECK(only.out.find("(^1 1, ^2 1, ^3 1): left = ^3 1, right = ^1 1") != std::string::npos);

    const auto iso = run_cli({"--signs", "2", "laws", "--only", "isomorphism", "--mags",
                              "0,1,1/2,3"});
    CHECK(iso.code == 0);
    CHECK(iso.out.find("isomorphism: holds") != std::string::npos);

    // Forcing the isomorphism law outside the two-sign carrier is a
    // semantic error, reported but not fatal to the other laws.
    CHECK(run_cli({"--signs", "3", "laws", "--only", "isomorphism", "--mags", "0,1"}).code ==
          3);
}

TEST_CASE("structured output is valid JSON and byte-stable") {
    const char* args[] = {"--signs", "3", "--output", "structured", "laws", "--mags", "0,1,2"};
    const auto first = run_cli({args[0], args[1], args[2], args[3], args[4], args[5], args[6]});
    const auto second = run_cli({args[0], args[1], args[2], args[3], args[4], args[5], args[6]});
    CHECK(first.code == 0);
    CHECK(first.out == second.out);

    const auto parsed = nlohmann::json::parse(first.out);
    CHECK(parsed.at("command") == "laws");
    CHECK(parsed.at("all_match_expected") == true);
    CHECK(parsed.at("reports").is_array());
    CHECK(parsed.at("reports").size() == 8);

    const auto eval_json =
        run_cli({"--signs", "2", "--output", "structured", "eval", "^1 2 * ^2 3"});
    const auto parsed_eval = nlohmann::json::parse(eval_json.out);
    CHECK(parsed_eval.at("result") == "^2 6");

    const auto solve_json = run_cli(
        {"--signs", "3", "--output", "structured", "solve", "--a", "^1 2", "--b", "^1 2"});
    const auto parsed_solve = nlohmann::json::parse(solve_json.out);
    CHECK(parsed_solve.at("solutions") == nlohmann::json::array({"^2 1", "^3 1"}));
    CHECK(parsed_solve.at("complete") == true);
}

TEST_CASE("printed results re-parse to the same value") {
    const auto r = run_cli({"--signs", "3", "eval", "(^1 1 + ^2 1) + ^3 1"});
    std::string printed = r.out.substr(0, r.out.size() - 1);
    const auto again = run_cli({"--signs", "3", "eval", printed.c_str()});
    CHECK(again.out == r.out);
}

TEST_CASE("laws exit code folding") {
    const Domain dom(3, {Magnitude(0), Magnitude(1)});
    auto outcomes = multisign::run_law_suite(dom, multisign::all_laws(3));
    CHECK(multisign::cli::laws_exit_code(outcomes, dom) == multisign::cli::exit_ok);

    // A verdict that disagrees with the expected table must map to the
    // law-mismatch exit code.
    auto flipped = outcomes;
    for (auto& outcome : flipped) {
        if (outcome.law == LawId::FullAssocMul) {
            outcome.report->verdict = Verdict::Fails;
        }
    }
    CHECK(multisign::cli::laws_exit_code(flipped, dom) == multisign::cli::exit_law_mismatch);

    auto with_budget = outcomes;
    with_budget.front().report.reset();
    with_budget.front().error = "too big";
    with_budget.front().budget_exceeded = true;
    CHECK(multisign::cli::laws_exit_code(with_budget, dom) == multisign::cli::exit_budget);

    auto with_error = outcomes;
    with_error.front().report.reset();
    with_error.front().error = "boom";
    CHECK(multisign::cli::laws_exit_code(with_error, dom) == multisign::cli::exit_semantic);
}

TEST_CASE("environment variable overrides the default budget") {
    setenv("MULTISIGN_TRIPLE_BUDGET", "10", 1);
    const auto r = run_cli({"--signs", "3", "laws", "--mags", "0,1,2"});
    unsetenv("MULTISIGN_TRIPLE_BUDGET");
    CHECK(r.code == 5);

    // An explicit flag wins over the environment.
    setenv("MULTISIGN_TRIPLE_BUDGET", "10", 1);
    const auto flagged =
        run_cli({"--signs", "3", "laws", "--mags", "0,1,2", "--budget", "2000000"});
    unsetenv("MULTISIGN_TRIPLE_BUDGET");
    CHECK(flagged.code == 0);
}
