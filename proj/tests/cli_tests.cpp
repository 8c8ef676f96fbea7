// End-to-end tests of the jack CLI binary: exit-code contract, JSON output
// schemas, round trips through the SymFun parser, and the verify suites.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "jacksf/jack.hpp"
#include "jacksf/json_io.hpp"

using namespace jacksf;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& stdin_data = "") {
    std::string command;
    if (!stdin_data.empty()) {
        std::string escaped;
        for (char c : stdin_data) {
            if (c == '\'')
                escaped += "'\\''";
            else
                escaped += c;
        }
        command = "printf '%s' '" + escaped + "' | ";
    }
    command += std::string(JACK_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe))
        output += buffer.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string p1_json() {
    return symfun_to_json(SymFun::unit(Partition{1}, Basis::p)).dump();
}

} // namespace

TEST_CASE("expand prints Jack expansions as SymFun JSON") {
    RunResult r = run_cli("expand -l 2");
    REQUIRE(r.exit_code == 0);
    SymFun got = symfun_from_json<AlphaRat>(json::parse(r.output));
    SymFun expected(Basis::m);
    expected.add_term(Partition{2}, AlphaRat::one());
    expected.add_term(Partition{1, 1}, AlphaRat(AlphaPoly(Rat(2)), AlphaPoly({Rat(1), Rat(1)})));
    CHECK(got == expected);

    RunResult constant = run_cli("expand -l -");
    REQUIRE(constant.exit_code == 0);
    CHECK(symfun_from_json<AlphaRat>(json::parse(constant.output)) == SymFun::one(Basis::m));

    RunResult pbasis = run_cli("expand -l 1,1 --basis p");
    REQUIRE(pbasis.exit_code == 0);
    SymFun expected_p(Basis::p);
    AlphaRat half = AlphaRat::from_rat(Rat(1, 2));
    expected_p.add_term(Partition{1, 1}, half);
    expected_p.add_term(Partition{2}, -half);
    CHECK(symfun_from_json<AlphaRat>(json::parse(pbasis.output)) == expected_p);
}

TEST_CASE("expand output is deterministic") {
    RunResult a = run_cli("expand -l 3,1");
    RunResult b = run_cli("expand -l 3,1");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("expand -l 1,3").exit_code == 2);         // not weakly decreasing
    CHECK(run_cli("expand").exit_code == 2);                // missing -l
    CHECK(run_cli("apply --op Q7 --in 1").exit_code == 2);  // unknown operator
    CHECK(run_cli("apply --op A1 --in '{bad json'").exit_code == 2);
    CHECK(run_cli("verify nonsense").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("apply runs the named operators") {
    RunResult r = run_cli("apply --op A1 --in '" + p1_json() + "'");
    REQUIRE(r.exit_code == 0);
    CHECK(symfun_from_json<AlphaRat>(json::parse(r.output)) ==
          (-AlphaRat::alpha()) * SymFun::unit(Partition{1}, Basis::p));

    RunResult h2 = run_cli("apply --op H2 --in '" +
                           symfun_to_json(SymFun::unit(Partition{2}, Basis::p)).dump() + "'");
    REQUIRE(h2.exit_code == 0);
    SymFun expected = (AlphaRat::from_int(2) * AlphaRat::alpha()) *
                          SymFun::unit(Partition{1, 1}, Basis::p) +
                      (AlphaRat::from_int(4) * AlphaRat::alpha() *
                       (AlphaRat::alpha() - AlphaRat::one())) *
                          SymFun::unit(Partition{2}, Basis::p);
    CHECK(symfun_from_json<AlphaRat>(json::parse(h2.output)) == expected);

    RunResult b1 = run_cli("apply --op B1 --in 1");
    REQUIRE(b1.exit_code == 0);
    CHECK(symfun_from_json<AlphaRat>(json::parse(b1.output)) ==
          SymFun::unit(Partition{1}, Basis::p));

    RunResult a_minus = run_cli("apply --op a-2 --in 1");
    REQUIRE(a_minus.exit_code == 0);
    CHECK(symfun_from_json<AlphaRat>(json::parse(a_minus.output)) ==
          SymFun::unit(Partition{2}, Basis::p));
}

TEST_CASE("apply reads stdin when --in is '-'") {
    RunResult r = run_cli("apply --op A1 --in -", p1_json());
    REQUIRE(r.exit_code == 0);
    CHECK(symfun_from_json<AlphaRat>(json::parse(r.output)) ==
          (-AlphaRat::alpha()) * SymFun::unit(Partition{1}, Basis::p));
}

TEST_CASE("CLI output round-trips through the parser") {
    RunResult expanded = run_cli("expand -l 2 --basis p");
    REQUIRE(expanded.exit_code == 0);
    RunResult applied = run_cli("apply --op A1 --in -", expanded.output);
    REQUIRE(applied.exit_code == 0);
    SymFun got = symfun_from_json<AlphaRat>(json::parse(applied.output));
    // P_(2) is homogeneous of degree 2: A^(1) acts as -2α
    SymFun expected = (AlphaRat::from_int(-2) * AlphaRat::alpha()) *
                      jack_P<AlphaRat>(Partition{2}).p_form;
    CHECK(got == expected);
}

TEST_CASE("eigenvalue subcommand") {
    RunResult r = run_cli("eigenvalue -l 1,1 --k 2");
    REQUIRE(r.exit_code == 0);
    CHECK(coeff_from_json<AlphaRat>(json::parse(r.output)) ==
          AlphaRat::alpha() * (AlphaRat::alpha() + AlphaRat::one()));

    RunResult series = run_cli("eigenvalue -l 1,1");
    REQUIRE(series.exit_code == 0);
    json parsed = json::parse(series.output);
    REQUIRE(parsed.contains("pochhammer"));
    REQUIRE(parsed["pochhammer"].size() == 3);
    CHECK(coeff_from_json<AlphaRat>(parsed["pochhammer"][0]) == AlphaRat::one());
    CHECK(coeff_from_json<AlphaRat>(parsed["pochhammer"][1]) ==
          AlphaRat::from_int(-2) * AlphaRat::alpha());
}

TEST_CASE("step subcommand") {
    RunResult r = run_cli("step --dir up -l 2 -i 1");
    REQUIRE(r.exit_code == 0);
    json parsed = json::parse(r.output);
    CHECK(partition_from_json(parsed["mu"]) == Partition{1});
    CHECK(coeff_from_json<AlphaRat>(parsed["coeff"]) ==
          AlphaRat::one() / (AlphaRat::from_int(2) * AlphaRat::alpha()));

    RunResult down = run_cli("step --dir down -l 1 -i 1");
    REQUIRE(down.exit_code == 0);
    CHECK(coeff_from_json<AlphaRat>(json::parse(down.output)["coeff"]) == AlphaRat::one());

    CHECK(run_cli("step --dir up -l 2,2 -i 1").exit_code == 2); // invalid move
}

TEST_CASE("kernel subcommand") {
    RunResult r = run_cli("kernel --degree 2");
    REQUIRE(r.exit_code == 0);
    json parsed = json::parse(r.output);
    bool found = false;
    for (const auto& term : parsed["terms"]) {
        if (partition_from_json(term["x"]) == Partition{2} &&
            partition_from_json(term["y"]) == Partition{2}) {
            found = true;
            CHECK(coeff_from_json<AlphaRat>(term["coeff"]) ==
                  AlphaRat::one() / (AlphaRat::from_int(2) * AlphaRat::alpha()));
        }
    }
    CHECK(found);
}

TEST_CASE("verify suites pass and exit 0") {
    RunResult eigen = run_cli("verify eigen --max-weight 3 --max-k 2");
    CHECK(eigen.exit_code == 0);
    CHECK(eigen.output.find("PASS") != std::string::npos);
    CHECK(eigen.output.find("all passed") != std::string::npos);

    CHECK(run_cli("verify detid --n 2 --m 2 --seeds 3").exit_code == 0);
    CHECK(run_cli("verify hs --max-weight 3").exit_code == 0);
    CHECK(run_cli("verify heisenberg --max-weight 3 --max-k 2").exit_code == 0);
}

TEST_CASE("numeric α mode") {
    RunResult r = run_cli("--alpha 7/3 verify hs --max-weight 3");
    CHECK(r.exit_code == 0);

    RunResult expanded = run_cli("--alpha 7/3 expand -l 2");
    REQUIRE(expanded.exit_code == 0);
    // 2/(α+1) at α = 7/3 is 3/5
    json parsed = json::parse(expanded.output);
    bool found = false;
    for (const auto& term : parsed["terms"])
        if (partition_from_json(term["partition"]) == Partition{1, 1}) {
            found = true;
            CHECK(term["coeff"]["num"] == json::parse(R"([[0,"3/5"]])"));
        }
    CHECK(found);

    // α = -1 pins the pole of 2/(α+1): runtime failure, exit 1
    CHECK(run_cli("--alpha -1 expand -l 2").exit_code == 1);
    // malformed α is a usage error
    CHECK(run_cli("--alpha x expand -l 2").exit_code == 2);
}

TEST_CASE("text format prints canonical coefficient strings") {
    RunResult r = run_cli("--format text expand -l 2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("2/(α+1)") != std::string::npos);
    CHECK(r.output.find("m_{2}") != std::string::npos);
    CHECK(r.output.find("m_{1,1}") != std::string::npos);
}
