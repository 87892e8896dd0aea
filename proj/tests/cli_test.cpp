#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
    CliResult result;
    std::string command = std::string(CKFOREST_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("expr subcommand matches the documented text forms") {
    CliResult r = run_cli("expr prelie \"[[]] []\" \"[]\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1*[[][]] [] + 1*[[[]]] [] + 1*[[]] [[]]\n");

    r = run_cli("expr antipode \"[[]]\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "-1*[[]] + 1*[] []\n");

    r = run_cli("expr coproduct \"1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1⊗1\n");

    r = run_cli("expr B \"[[]] []\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1*[[][[]]]\n");

    r = run_cli("expr N \"[] [] []\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "3*[[]] [] []\n");

    r = run_cli("expr product \"[[]]\" \"[] []\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1*[[]] [] []\n");
}

TEST_CASE("delta subcommand") {
    CliResult r = run_cli("delta 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "1*[[][][]] + 3*[[][[]]] + 1*[[[][]]] + 1*[[[[]]]]\n");

    r = run_cli("delta 1 --what antipode-forest");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "-1*[]\n");

    r = run_cli("delta 3 --what coproduct");
    CHECK(r.exit_code == 0);
    // the five monomial terms of the order-3 coproduct, in the forest basis
    CHECK(r.output ==
          "1⊗[[][]] + 1⊗[[[]]] + []⊗[[]] + []⊗[] [] + "
          "3*[[]]⊗[] + [[][]]⊗1 + [[[]]]⊗1\n");

    r = run_cli("delta 20");
    CHECK(r.exit_code == 2);  // guard

    r = run_cli("delta 0");
    CHECK(r.exit_code == 2);
}

TEST_CASE("coeffs subcommand") {
    CliResult r = run_cli("coeffs 3 --method all");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "n=3 method=extraction\n"
          "(0,0,1) a=-1 b=1/2\n"
          "(1,1,0) a=4 b=2\n"
          "(3,0,0) a=-2 b=1\n"
          "AGREE\n");

    r = run_cli("coeffs 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "n=2 method=recursion\n"
          "(0,1) a=-1 b=1\n"
          "(2,0) a=1 b=1\n");

    r = run_cli("coeffs 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "n=1 method=recursion\n(1) a=-1 b=1\n");

    r = run_cli("coeffs 3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.substr(0, 15) == "n,method,index,");
}

TEST_CASE("poly subcommand") {
    CliResult r = run_cli("poly 1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "2*X1^2 + 1*X1*X2 + -9*X1 + -1*X2 + 7\nweight=2 degree=2\n");

    r = run_cli("poly 0,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1*X1 + -1\nweight=1 degree=1\n");

    r = run_cli("poly 0,0,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\nweight=0 degree=0\n");

    r = run_cli("poly 1,x");
    CHECK(r.exit_code == 2);
}

TEST_CASE("sequence subcommand") {
    CliResult r = run_cli("sequence A152947 --n-max 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "4\n7\n11\n16\n");

    r = run_cli("sequence A000142 --n-max 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n1\n2\n6\n24\n");

    r = run_cli("sequence custom --tail 2 --n-max 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "2/3\n13/6\n137/30\n");  // n = 4, 5, 6

    r = run_cli("sequence custom --n-max 6");
    CHECK(r.exit_code == 2);  // custom requires --tail

    r = run_cli("sequence A000142 --n-max 99");
    CHECK(r.exit_code == 2);  // guard
}

TEST_CASE("verify subcommand") {
    CliResult r = run_cli("verify --suites lemma-2-6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.substr(0, 14) == "PASS lemma-2-6");

    r = run_cli("verify --suites no-such-suite");
    CHECK(r.exit_code == 2);

    r = run_cli(
        "verify --suites theorem-1-3 --max-size 4 --random-triples 10 --random-size 5");
    CHECK(r.exit_code == 0);
}

TEST_CASE("usage and parse errors exit with 2") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("expr antipode \"[[\"").exit_code == 2);
    CHECK(run_cli("expr prelie \"[]\"").exit_code == 2);   // arity
    CHECK(run_cli("").exit_code == 2);                      // subcommand required
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("byte identical reruns") {
    for (const std::string& args :
         {std::string("delta 5"), std::string("coeffs 4 --method all --format json"),
          std::string("poly 2,1"), std::string("sequence A067318 --n-max 9")}) {
        CliResult first = run_cli(args);
        CliResult second = run_cli(args);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.output == second.output);
    }
}
