#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "denum/partition.hpp"
#include "denum/waves.hpp"

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("DENUM_CLI");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int rc = pclose(pipe);
    return RunResult{WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, std::move(out)};
}

}  // namespace

TEST_CASE("count text") {
    RunResult r = run_cli("count -d 1 -L 3");
    CHECK(r.status == 0);
    CHECK(r.out == "0,1\n1,1\n2,1\n3,1\n");
    RunResult big = run_cli("count -d 1,2,3,4,5 -L 100");
    CHECK(big.status == 0);
    REQUIRE(big.out.size() >= 10);
    CHECK(big.out.substr(big.out.size() - 10) == "100,46262\n");
    RunResult zero = run_cli("count -d 7 -L 0");
    CHECK(zero.status == 0);
    CHECK(zero.out == "0,1\n");
}

TEST_CASE("count csv and json") {
    RunResult csv = run_cli("count -d 2 -L 3 --format csv");
    CHECK(csv.status == 0);
    CHECK(csv.out == "l,value\n0,1\n1,0\n2,1\n3,0\n");
    RunResult js = run_cli("count -d 2 -L 3 --format json");
    CHECK(js.status == 0);
    CHECK(js.out == "[\"1\",\"0\",\"1\",\"0\"]\n");
}

TEST_CASE("wave subcommand") {
    RunResult r = run_cli("wave -d 1,2 -q 2");
    CHECK(r.status == 0);
    CHECK(r.out == "0,1/4\n1,-1/4\n");
    RunResult js = run_cli("wave -d 1,2 -q 2 --format json");
    CHECK(js.status == 0);
    CHECK(js.out == "{\"q\":2,\"shift\":\"3/2\",\"residues\":[[\"1/4\"],[\"-1/4\"]]}\n");
}

TEST_CASE("dedekind subcommand") {
    RunResult r = run_cli("dedekind -l 0 -b 1 -q 2");
    CHECK(r.status == 0);
    CHECK(r.out == "1/4\n");
    RunResult neg = run_cli("dedekind -l -1 -b 1 -q 2");
    CHECK(neg.status == 0);
    CHECK(neg.out == "-1/4\n");
    RunResult js = run_cli("dedekind -l 0 -b 2,3 -q 5 --format json");
    CHECK(js.status == 0);
    std::string v = denum::fourier_dedekind(denum::DedekindSumSpec{0, {2, 3}, 5}).to_string();
    CHECK(js.out == "{\"l\":0,\"betas\":[2,3],\"q\":5,\"value\":\"" + v + "\"}\n");
}

TEST_CASE("quasipoly emits a loadable decomposition") {
    RunResult one = run_cli("quasipoly -d 1");
    CHECK(one.status == 0);
    CHECK(one.out ==
          "{\"components\":[1],\"shift\":\"1/2\",\"waves\":[{\"q\":1,\"residues\":[[\"1\"]]}]}\n");

    RunResult qp = run_cli("quasipoly -d 2,3,5");
    CHECK(qp.status == 0);
    std::string j = qp.out;
    REQUIRE(!j.empty());
    if (j.back() == '\n') j.pop_back();
    denum::QuasiPolynomial back = denum::quasipolynomial_from_json(j);
    denum::DenumerantTable t = denum::denumerant_bruteforce(20, {2, 3, 5});
    for (long l = 0; l <= 20; ++l)
        CHECK(denum::evaluate(back, l) == denum::Rational(t.values[static_cast<std::size_t>(l)]));
}

TEST_CASE("verify single set") {
    RunResult a = run_cli("verify -d 1,2,3,4,5 -L 120");
    CHECK(a.status == 0);
    CHECK(a.out == "OK\n");
    RunResult b = run_cli("verify -d 6,10,15 -L 90");
    CHECK(b.status == 0);
    CHECK(b.out == "OK\n");
    RunResult c = run_cli("verify -d 2,2 -L 50 --workers 3");
    CHECK(c.status == 0);
    CHECK(c.out == "OK\n");
}

TEST_CASE("verify corpus is byte deterministic") {
    RunResult a = run_cli("verify --seed 1 --workers 1 -L 60");
    RunResult b = run_cli("verify --seed 1 --workers 4 -L 60");
    RunResult c = run_cli("verify --seed 1 --workers 4 -L 60");
    CHECK(a.status == 0);
    CHECK(b.status == 0);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
    CHECK(a.out.rfind("d=2,4,6 L=60: ", 0) == 0);
    // 4 anchors + 30 random cases + the summary line
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 35);
    REQUIRE(a.out.size() >= 3);
    CHECK(a.out.substr(a.out.size() - 3) == "OK\n");
    RunResult d = run_cli("verify --seed 2 -L 60");
    CHECK(d.status == 0);
    CHECK(d.out != a.out);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("count -d 1,2").status == 2);
    CHECK(run_cli("count -d 0 -L 5").status == 2);
    CHECK(run_cli("count -d 1 -L 3 --format yaml").status == 2);
    CHECK(run_cli("wave -d 1,2,3 -q 7").status == 2);
    CHECK(run_cli("dedekind -l 0 -b 2 -q 4").status == 2);
    CHECK(run_cli("verify").status == 2);
    CHECK(run_cli("verify -d 1,2 --seed 3").status == 2);
    CHECK(run_cli("bogus").status == 2);
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("--help").status == 0);
}
