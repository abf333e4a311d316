#include "support.hpp"

#include <charfact/cli.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace charfact;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

// Runs the installed binary through the shell; stderr is discarded.
Outcome run_binary(const std::string& args) {
    std::string cmd = std::string(CHARFACT_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, {}};
}

}  // namespace

TEST_CASE("partition subcommand") {
    SECTION("beta set, counts and sigma") {
        auto r = run({"--json", "partition", "5,2,2,1,1", "--t", "3", "--m", "6"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j["beta"] == json({10, 6, 5, 3, 2, 0}));
        CHECK(j["counts"] == json({3, 1, 2}));
        CHECK(j["sigma"] == json({2, 4, 6, 1, 3, 5}));
        CHECK(j["conjugate"] == "5,3,1,1,1");
        CHECK(j["size"] == 11);
        CHECK(j["frobenius"]["alpha"] == json({4, 0}));
        CHECK(j["frobenius"]["beta"] == json({4, 1}));
    }
    SECTION("empty partition") {
        auto r = run({"--json", "partition", ""});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j["partition"] == "");
        CHECK(j["size"] == 0);
        CHECK(j["length"] == 0);
    }
    SECTION("core and quotient of (2) at t = 2") {
        auto r = run({"--json", "partition", "2", "--t", "2", "--m", "2"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j["core"] == "");
        CHECK(j["quotient"] == json({"", "1"}));
        CHECK(j["sigma_sign"] == -1);
    }
    SECTION("table output") {
        auto r = run({"partition", "3,1"});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("conjugate: 2,1,1\n") != std::string::npos);
    }
    SECTION("json round trip through the partition parser") {
        for (const auto& lambda : partitions_up_to(6, 6)) {
            auto r = run({"--json", "partition", to_string(lambda)});
            REQUIRE(r.code == 0);
            json j = json::parse(r.out);
            CHECK(parse_partition(j["partition"].get<std::string>()) == lambda);
            CHECK(parse_partition(j["conjugate"].get<std::string>()) == conjugate(lambda));
        }
    }
    SECTION("usage errors") {
        CHECK(run({"partition", "2,3"}).code == 2);
        CHECK(run({"partition", "a"}).code == 2);
        CHECK(run({"partition", "3,2,1", "--m", "2"}).code == 2);
        CHECK(run({"partition"}).code == 2);
    }
}

TEST_CASE("char subcommand") {
    CHECK(run({"char", "schur", "2", "X(1) twist(2)"}).out == "x1^2\n");
    CHECK(run({"char", "sp", "", "X(2)"}).out == "1\n");
    CHECK(run({"char", "so-odd", "1", "X(1)"}).out == "x1 + 1 + x1^-1\n");
    CHECK(run({"char", "schur", "1", "X(1) twist(2)"}).out == "0\n");

    auto r = run({"--json", "char", "skew", "2,1", "X(2)", "--mu", "1"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["kind"] == "skew");
    CHECK(j["mu"] == "1");
    // s_{(2,1)/(1)}(x1, x2) = s_2 + s_{1,1} = (x1 + x2)^2.
    CHECK(j["value"] == "x1^2 + 2*x1*x2 + x2^2");

    CHECK(run({"char", "nosuchkind", "1", "X(1)"}).code == 2);
    CHECK(run({"char", "schur", "1", "Q(1)"}).code == 2);
    CHECK(run({"char", "hook", "1", "X(1)"}).code == 2);
}

TEST_CASE("verify subcommand") {
    SECTION("single instance") {
        auto r = run({"--json", "verify", "SCHUR_FAC", "--t", "2", "--n", "1", "--lambda", "2"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j["verdict"] == "Match");
        CHECK(j["lhs"] == "x1^2");
        CHECK(j["rhs"] == "x1^2");
    }
    SECTION("vanishing left side is not a failure") {
        auto r = run({"--json", "verify", "SCHUR_FAC", "--t", "2", "--n", "1", "--lambda", "1"});
        CHECK(r.code == 0);
        CHECK(json::parse(r.out)["verdict"] == "NotApplicable-LHS-Zero");
    }
    SECTION("converse witness") {
        auto r = run({"--json", "verify", "O_SP_IMPLICATION", "--t", "3", "--n", "1", "--mu", "1"});
        CHECK(r.code == 0);
        CHECK(json::parse(r.out)["verdict"] == "ConverseWitness");
    }
    SECTION("sweep") {
        auto r = run({"--json", "--threads", "2", "verify", "UNIV_ROOTS_SP", "--sweep", "size<=6;t=2,3,4"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j["summary"].value("Mismatch", 0) == 0);
        CHECK(j["total"] == j["reports"].size());
        CHECK(j["total"].get<int>() > 0);
        CHECK(j["bounds"]["threads"] == 2);
        for (const auto& rep : j["reports"]) {
            long long v = std::stoll(rep["lhs"].get<std::string>());
            CHECK(std::abs(v) <= 2);
        }
    }
    SECTION("sweep output does not depend on threads") {
        auto one = run({"--json", "--threads", "1", "verify", "SCHUR_FAC", "--sweep", "size<=5;t=2,3;n=1"});
        auto four = run({"--json", "--threads", "4", "verify", "SCHUR_FAC", "--sweep", "size<=5;t=2,3;n=1"});
        json a = json::parse(one.out), b = json::parse(four.out);
        CHECK(a["reports"] == b["reports"]);
        CHECK(a["summary"] == b["summary"]);
    }
    SECTION("empty sweep") {
        auto r = run({"--json", "verify", "SCHUR_FAC", "--sweep", ""});
        CHECK(r.code == 0);
        CHECK(json::parse(r.out)["total"] == 0);
    }
    SECTION("usage errors") {
        CHECK(run({"verify", "NO_SUCH_THEOREM"}).code == 2);
        CHECK(run({"verify", "SCHUR_FAC", "--t", "2"}).code == 2);
        CHECK(run({"verify", "SCHUR_FAC", "--t", "2", "--n", "1", "--lambda", "1,1,1"}).code == 2);
        CHECK(run({"verify", "SCHUR_FAC", "--sweep", "size<=x"}).code == 2);
        CHECK(run({"verify", "SCHUR_FAC", "--bogus"}).code == 2);
        CHECK(run({}).code == 2);
    }
}

TEST_CASE("output file") {
    auto path = std::filesystem::temp_directory_path() / "charfact_cli_out.json";
    std::filesystem::remove(path);
    auto r = run({"--json", "--out", path.string(), "partition", "3,1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    json j = json::parse(in);
    CHECK(j["partition"] == "3,1");
    std::filesystem::remove(path);
}

TEST_CASE("binary exit codes and environment") {
    CHECK(run_binary("verify SCHUR_FAC --t 2 --n 1 --lambda 2").code == 0);
    CHECK(run_binary("char nosuchkind 1 'X(1)'").code == 2);
    CHECK(run_binary("").code == 2);
    auto r = run_binary("--json char schur 2 'X(1) twist(2)'");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["value"] == "x1^2");
    auto env = run_binary("--json verify SCHUR_FAC --sweep 'size<=3;t=2;n=1'");
    REQUIRE(env.code == 0);
    auto pinned = run_binary("--json verify SCHUR_FAC --sweep 'size<=3;t=2;n=1;threads=1'");
    CHECK(json::parse(env.out)["reports"] == json::parse(pinned.out)["reports"]);
    setenv("CHARFACT_THREADS", "3", 1);
    CHECK(resolve_threads(0) == 3);
    auto from_env = run_binary("--json verify SCHUR_FAC --sweep 'size<=3;t=2;n=1'");
    CHECK(json::parse(from_env.out)["reports"] == json::parse(pinned.out)["reports"]);
    unsetenv("CHARFACT_THREADS");
}
