#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidkit/brunnian.hpp"
#include "braidkit/cli.hpp"
#include "braidkit/maps.hpp"
#include "braidkit/parser.hpp"

using namespace braidkit;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
    std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
    int code = -1;
    try {
        code = cli_main(args);
    } catch (...) {
        std::cout.rdbuf(old_out);
        std::cerr.rdbuf(old_err);
        throw;
    }
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("equality of the adjacent relation") {
    const CliResult r = run_cli({"equal", "--n", "3", "s1 s2 s1", "s2 s1 s2"});
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");
}

TEST_CASE("failed equality exits one") {
    const CliResult r = run_cli({"equal", "--n", "3", "s1", "s2"});
    CHECK(r.code == 1);
    CHECK(r.out == "false\n");
}

TEST_CASE("brunnian commutator query") {
    const CliResult r = run_cli({"brunnian", "--n", "3", "[A[1,2],A[2,3]]"});
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");
}

TEST_CASE("brunnian rejects non-pure input as a usage error") {
    const CliResult r = run_cli({"brunnian", "--n", "3", "s1"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("eval prints reduced words") {
    CHECK(run_cli({"eval", "--n", "2", "A[1,2]"}).out == "s1^2\n");
    CHECK(run_cli({"eval", "--n", "3", "[s1,s1]"}).out == "1\n");
    CHECK(run_cli({"eval", "--n", "3", "A[0,2]"}).out == "s2^-2 s1^-2\n");
    const std::string z2 =
        to_text(free_cancel(pow(expand(full_twist(3)), -2)));
    CHECK(run_cli({"eval", "--n", "3", "z^-2"}).out == z2 + "\n");
}

TEST_CASE("eval accepts product stars and parentheses") {
    CHECK(run_cli({"eval", "--n", "3", "(s1 * s2)^2"}).out == "s1 s2 s1 s2\n");
    CHECK(run_cli({"eval", "--n", "3", "s1^0"}).out == "1\n");
}

TEST_CASE("parse errors exit two with a message") {
    for (const std::string bad :
         {"s9", "A[1,1]", "A[1,5]", "s1^", "(s1", "[s1 s2]", ")", "", "q", "A[1 2]"}) {
        const CliResult r = run_cli({"eval", "--n", "3", bad});
        INFO("input: ", bad, " err: ", r.err);
        CHECK(r.code == 2);
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("triviality queries") {
    CHECK(run_cli({"trivial", "--n", "3", "[s1,s1]"}).code == 0);
    const CliResult r = run_cli({"trivial", "--n", "2", "s1"});
    CHECK(r.code == 1);
    CHECK(r.out == "false\n");
}

TEST_CASE("permutation output") {
    const CliResult r = run_cli({"perm", "--n", "3", "s1 s2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1->3 2->1 3->2\n");
}

TEST_CASE("combing output") {
    CHECK(run_cli({"comb", "--n", "2", "s1^2"}).out == "A[1,2]\n");
    CHECK(run_cli({"comb", "--n", "3", "s2 s1^2 s2^-1"}).out == "A[1,3]\n");
    CHECK(run_cli({"comb", "--n", "3", "s1"}).code == 2); // not pure
}

TEST_CASE("abelianize output") {
    const CliResult r = run_cli({"abelianize", "--n", "3", "z"});
    CHECK(r.code == 0);
    CHECK(r.out == "(e1,2=1, e1,3=1, e2,3=1)\n");
    CHECK(run_cli({"abelianize", "--n", "3", "s1"}).code == 2); // not pure
}

TEST_CASE("applying the named maps") {
    CHECK(run_cli({"apply", "--n", "3", "--map", "theta", "A[2,3]"}).out == "A[2,3]\n");
    CHECK(run_cli({"apply", "--n", "3", "--map", "theta-inv", "A[1,3]"}).out == "A[0,3]\n");
    CHECK(run_cli({"apply", "--n", "3", "--map", "w", "A[1,3]"}).out ==
          "A[1,2]^-1 A[1,3]^-1\n");
    CHECK(run_cli({"apply", "--n", "3", "--map", "chi", "s1 s2^-1"}).out == "s1^-1 s2\n");
    CHECK(run_cli({"apply", "--n", "3", "--map", "del", "A[0,2]"}).out == "1\n");
    CHECK(run_cli({"apply", "--n", "4", "--map", "d:2", "A[1,3]"}).out == "s1^2\n");
    CHECK(run_cli({"apply", "--n", "3", "--map", "conj:s1", "A[2,3]"}).out ==
          "s1^-1 s2^2 s1\n");
    CHECK(run_cli({"apply", "--n", "3", "--map", "nope", "s1"}).code == 2);
    CHECK(run_cli({"apply", "--n", "3", "--map", "d:x", "s1^2"}).code == 2);
}

TEST_CASE("conjugation through the CLI matches the library") {
    const CliResult r = run_cli({"apply", "--n", "3", "--map", "conj:s1", "A[2,3]"});
    const BraidWord got = eval(parse(r.out, 3), 3);
    CHECK(equal(got, expand_letter(1, 3, 3)));
}

TEST_CASE("samples parse back and satisfy their contracts") {
    const CliResult brun = run_cli({"sample", "--n", "3", "--set", "brun", "--seed", "9"});
    CHECK(brun.code == 0);
    const BraidWord u = eval(parse(brun.out, 3), 3);
    CHECK(is_brunnian(u));

    const CliResult cl =
        run_cli({"sample", "--n", "3", "--set", "closure:A[1,3]", "--seed", "4"});
    CHECK(cl.code == 0);
    const BraidWord x = eval(parse(cl.out, 3), 3);
    CHECK(is_trivial(delete_strand(x, 1)));
    CHECK(is_trivial(delete_strand(x, 3)));

    const CliResult bd = run_cli({"sample", "--n", "3", "--set", "bd", "--seed", "2"});
    CHECK(bd.code == 0);
    CHECK(in_Z(eval(parse(bd.out, 3), 3)));

    CHECK(run_cli({"sample", "--n", "3", "--set", "nope"}).code == 2);
}

TEST_CASE("sampling is deterministic per seed") {
    const CliResult a = run_cli({"sample", "--n", "3", "--set", "brun", "--seed", "5"});
    const CliResult b = run_cli({"sample", "--n", "3", "--set", "brun", "--seed", "5"});
    CHECK(a.out == b.out);
}

TEST_CASE("single check as JSON") {
    const CliResult r = run_cli({"check", "C15", "--n", "4", "--format", "json"});
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("check") == "C15");
    CHECK(j.at("n") == 4);
    CHECK(j.at("status") == "pass");
}

TEST_CASE("check ranges produce wrapped JSON") {
    const CliResult r = run_cli({"check", "C0", "--n", "3..4", "--format", "json"});
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("version") == "1");
    CHECK(j.at("total") == 2);
    CHECK(j.at("passed") == 2);
}

TEST_CASE("full catalog run at three strands") {
    const CliResult r = run_cli({"check", "--all", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("total") != std::string::npos);
}

TEST_CASE("the negative control fails the run") {
    const CliResult r = run_cli({"check", "X11", "--n", "3"});
    CHECK(r.code == 1);
    CHECK(r.out.find("fail") != std::string::npos);
}

TEST_CASE("skips do not fail the run") {
    const CliResult r = run_cli({"check", "C18", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("skip") != std::string::npos);
}

TEST_CASE("unknown check ids are usage errors") {
    const CliResult r = run_cli({"check", "NOPE", "--n", "3"});
    CHECK(r.code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == 2);                                  // no subcommand
    CHECK(run_cli({"eval", "s1"}).code == 2);                      // missing --n
    CHECK(run_cli({"eval", "--n", "3"}).code == 2);                // missing expression
    CHECK(run_cli({"eval", "--n", "3..4", "s1"}).code == 2);       // range outside check
    CHECK(run_cli({"eval", "--n", "x", "s1"}).code == 2);          // bad strand count
    CHECK(run_cli({"check", "--n", "3"}).code == 2);               // no ids and no --all
    CHECK(run_cli({"equal", "--n", "3", "s1"}).code == 2);         // one operand
    CHECK(run_cli({"eval", "--n", "3", "--format", "x", "s1"}).code == 2);
}

TEST_CASE("help exits zero") {
    const CliResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Usage") != std::string::npos);
}

TEST_CASE("resource limits exit three") {
    const CliResult r = run_cli({"trivial", "--n", "6", "--max-free-len", "20", "z^2"});
    CHECK(r.code == 3);
    CHECK(r.err.find("resource limit") != std::string::npos);
}

TEST_CASE("json output for predicates and words") {
    const CliResult t = run_cli({"trivial", "--n", "3", "--format", "json", "[s1,s1]"});
    CHECK(nlohmann::json::parse(t.out).at("result") == true);
    const CliResult e = run_cli({"eval", "--n", "2", "--format", "json", "A[1,2]"});
    CHECK(nlohmann::json::parse(e.out).at("result") == "s1^2");
}

TEST_CASE("print and reparse round trip on library words") {
    const PureWord w = commutator_pure(PureWord::single(3, 1, 3), a0(2, 3));
    const std::string text = to_text(w);
    const PureWord back = eval_pure(parse(text, 3), 3);
    CHECK(equal(expand(back), expand(w)));

    const BraidWord u(4, {3, -1, 2, 2, -3});
    const BraidWord ub = eval(parse(to_text(u), 4), 4);
    CHECK(ub == u);
}

TEST_CASE("expression positions in parse errors") {
    try {
        parse("s1 s9", 3);
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 4);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}
