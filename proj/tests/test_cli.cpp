// Integration tests driving the installed CLI binary. The binary path and
// fixture directory come in as compile definitions from CMake.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <catch2/catch_amalgamated.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(EQLOC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture_path(const std::string& name) {
    return std::string(EQLOC_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("integrate subcommand") {
    auto chern = run_cli("integrate --builtin cpn:2 --chern-power");
    CHECK(chern.exit_code == 0);
    CHECK(chern.out == "result = 1\n");

    auto area = run_cli("integrate --builtin s2 --scale 1 --power 1");
    CHECK(area.exit_code == 0);
    CHECK(area.out == "result = 2\n");

    auto scaled = run_cli("integrate --builtin s2 --scale 3/2 --power 1");
    CHECK(scaled.out == "result = 3\n");

    auto contributions = run_cli("integrate --builtin cpn:1 --power 1 --contributions");
    CHECK(contributions.exit_code == 0);
    CHECK(contributions.out ==
          "result = 1\n"
          "f0: t0 / (t0 - t1)\n"
          "f1: -t1 / (t0 - t1)\n");
}

TEST_CASE("two-pi rendering") {
    auto r = run_cli("integrate --builtin s2 --power 1 --scale-two-pi");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("result = 2\n") == 0);
    CHECK(r.out.find("4π ≈ 12.5663706143592") != std::string::npos);
}

TEST_CASE("class-file integrands") {
    auto r = run_cli("integrate --model " + fixture_path("cp2_collapsed.json") +
                     " --class-file " + fixture_path("class_cp2_collapsed_chern.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "result = 1\n");
}

TEST_CASE("volume subcommand") {
    CHECK(run_cli("volume --builtin s2 --scale 1").out == "2\n");
    CHECK(run_cli("volume --builtin product:s2,s2").out == "4\n");
    CHECK(run_cli("volume --builtin cpn:1").out == "1\n");
}

TEST_CASE("chi subcommand") {
    CHECK(run_cli("chi --builtin s2").out == "2\n");
    CHECK(run_cli("chi --builtin cpn:3").out == "4\n");
    CHECK(run_cli("chi --builtin product:s2,cpn:1").out == "4\n");
    // every Euler summand cancels to 1
    CHECK(run_cli("chi --builtin s2 --contributions").out == "2\nN: 1\nS: 1\n");
}

TEST_CASE("dh subcommand") {
    auto s2 = run_cli("dh --builtin s2 --order 1");
    CHECK(s2.exit_code == 0);
    CHECK(s2.out == "0!: 0\n1!: 2\n");

    auto cp2 = run_cli("dh --builtin cpn:2");
    CHECK(cp2.out == "0!: 0\n1!: 0\n2!: 1/2\n");

    auto gaussian = run_cli("dh --builtin gaussian");
    CHECK(gaussian.exit_code == 0);
    CHECK(gaussian.out == "closed form = 1 / (t0)\n");
}

TEST_CASE("check subcommand") {
    auto good = run_cli("check --model " + fixture_path("s2.json"));
    CHECK(good.exit_code == 0);
    CHECK(good.out.find("PASS validation") != std::string::npos);
    CHECK(good.out.find("FAIL") == std::string::npos);

    auto zero_weight = run_cli("check --model " + fixture_path("zero_weight.json"));
    CHECK(zero_weight.exit_code == 1);
    CHECK(zero_weight.out.find("FAIL validation") != std::string::npos);

    auto tampered = run_cli("check --model " + fixture_path("cp1_tampered.json"));
    CHECK(tampered.exit_code == 1);
    CHECK(tampered.out.find("PASS validation") != std::string::npos);
    CHECK(tampered.out.find("FAIL polynomiality") != std::string::npos);
}

TEST_CASE("exit codes") {
    // 2: input errors
    CHECK(run_cli("integrate --builtin nosuch --power 1").exit_code == 2);
    CHECK(run_cli("integrate --builtin s2").exit_code == 2);  // no integrand
    CHECK(run_cli("volume --model /nonexistent.json").exit_code == 2);
    CHECK(run_cli("volume").exit_code == 2);  // neither --model nor --builtin
    CHECK(run_cli("nosuchcommand").exit_code == 2);

    // 3: mathematical inconsistency, remainder printed
    auto r = run_cli("integrate --model " + fixture_path("cp1_tampered.json") + " --power 1");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("remainder = ") == 0);
}

TEST_CASE("output is deterministic") {
    const std::string cmd = "integrate --builtin cpn:3 --chern-power --contributions";
    auto first = run_cli(cmd);
    auto second = run_cli(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
}
