#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

// Drives the installed command-line binary; ctest points EULERBT_CLI at it.

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("EULERBT_CLI");
    REQUIRE_MESSAGE(p != nullptr, "EULERBT_CLI must point at the command-line binary");
    return p;
}

CliResult run(const std::string& args, bool quiet_stderr = false) {
    std::string cmd = cli_path() + " " + args + (quiet_stderr ? " 2>/dev/null" : "");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p.string();
}

}  // namespace

TEST_CASE("verify: per-n pass lines and exit code") {
    CliResult r = run("verify --identity simons1 --n-max 10");
    CHECK(r.code == 0);
    std::string expect;
    for (int n = 0; n <= 10; ++n) expect += "PASS eq1 n=" + std::to_string(n) + "\n";
    CHECK(r.out == expect);
}

TEST_CASE("verify: q below n warns but still passes") {
    CliResult r = run("verify --identity eq11 --q 1 --n-max 3");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "PASS eq11 n=0\n"
          "PASS eq11 n=1\n"
          "WARN eq11 n=2 QBelowN (q=1 < n=2)\n"
          "PASS eq11 n=2\n"
          "WARN eq11 n=3 QBelowN (q=1 < n=3)\n"
          "PASS eq11 n=3\n");
}

TEST_CASE("verify: JSON output round-trips and is deterministic") {
    CliResult a = run("verify --all --n-max 3 --json");
    CHECK(a.code == 0);
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(a.out);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "verify");
    CHECK(j["n_max"] == 3);
    CHECK(j["q"] == "symbolic");
    CHECK(j["all_pass"] == true);
    CHECK(j["results"].size() == 40);  // 10 identities x 4 values of n
    CHECK(j.dump(2) + "\n" == a.out);

    CliResult b = run("verify --all --n-max 3 --json");
    CHECK(b.out == a.out);
}

TEST_CASE("legendre: golden output") {
    CliResult r = run("legendre --n 2 --rep all");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "rodrigues: 3/2*x^2 - 1/2\n"
          "rep20: 3/2*x^2 - 1/2\n"
          "rep21: 3/2*x^2 - 1/2\n"
          "rep22: 3/2*x^2 - 1/2\n"
          "AGREE\n");

    CliResult one = run("legendre --n 3 --rep rodrigues");
    CHECK(one.code == 0);
    CHECK(one.out == "5/2*x^3 - 3/2*x\n");

    CliResult js = run("legendre --n 1 --rep all --json");
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(js.out);
    CHECK(j["agree"] == true);
    CHECK(j["reps"]["rep21"] == "x");
}

TEST_CASE("expand: the eq11 generating coefficient") {
    CliResult r = run("expand --identity eq11 --n 2 --q 3");
    CHECK(r.code == 0);
    CHECK(r.out == "x^2 + 6*x*y + 3*y^2\n");

    CliResult bad = run("expand --identity eq11 --n 2 --q 1", true);
    CHECK(bad.code == 2);

    CliResult wrong = run("expand --identity eq1 --n 2 --q 3", true);
    CHECK(wrong.code == 2);
}

TEST_CASE("transform: text and json") {
    std::string ones = write_temp("eulerbt_cli_ones.txt", "1\n1\n1\n1\n");
    CliResult r = run("transform " + ones);
    CHECK(r.code == 0);
    CHECK(r.out == "1\n2\n4\n8\n");

    std::string pows = write_temp("eulerbt_cli_pows.txt", "# doubling\n1\n2\n4\n8\n");
    CliResult inv = run("transform --inverse " + pows);
    CHECK(inv.code == 0);
    CHECK(inv.out == "1\n1\n1\n1\n");

    CliResult js = run("transform --json " + ones);
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(js.out);
    CHECK(j["schema"] == 1);
    CHECK(j["inverse"] == false);
    CHECK(j["output"] == nlohmann::ordered_json::array({"1", "2", "4", "8"}));
    CHECK(j.dump(2) + "\n" == js.out);
}

TEST_CASE("euler and gen-euler") {
    std::string one = write_temp("eulerbt_cli_one.txt", "1\n0\n0\n");
    CliResult r = run("euler " + one);
    CHECK(r.code == 0);
    CHECK(r.out == "t^0: 1\nt^1: 1\nt^2: 1\n");

    CliResult same = run("gen-euler --x 1 --alpha 0 " + one);
    CHECK(same.code == 0);
    CHECK(same.out == r.out);

    CliResult sym = run("gen-euler " + one);
    CHECK(sym.code == 0);
    CHECK(sym.out ==
          "t^0: 1\n"
          "t^1: alpha*x + x\n"
          "t^2: 1/2*alpha^2*x^2 + 3/2*alpha*x^2 + x^2\n");

    CliResult js = run("gen-euler --x 1/2 --alpha beta --json " + one);
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(js.out);
    CHECK(j["command"] == "gen-euler");
    CHECK(j["x"] == "1/2");
    CHECK(j["alpha"] == "beta");
    CHECK(j["coefficients"][0] == "1");
}

TEST_CASE("accelerate: tables and errors against a reference") {
    std::string recip = write_temp("eulerbt_cli_recip.txt", "1\n1/2\n1/3\n1/4\n1/5\n");
    CliResult r = run("accelerate " + recip);
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 16) == "# j plain accel\n");
    CHECK(r.out.find("\n0 1 1/2\n") != std::string::npos);

    CliResult err = run("accelerate --reference 0.693147180559945 --digits 6 " + recip);
    CHECK(err.code == 0);
    CHECK(err.out.substr(0, 28) == "# j plain_error accel_error\n");

    CliResult js = run("accelerate --terms 3 --json " + recip);
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(js.out);
    CHECK(j["terms"] == 3);
    CHECK(j["c"].size() == 4);
    CHECK(j["diffs"][1] == "-1/2");
    CHECK(j["accel_partials"][0] == "1/2");

    CliResult short_in = run("accelerate --terms 9 " + recip, true);
    CHECK(short_in.code == 2);
}

TEST_CASE("usage errors exit with 2, help with 0") {
    CHECK(run("frobnicate", true).code == 2);
    CHECK(run("verify", true).code == 2);
    CHECK(run("verify --identity nosuch", true).code == 2);
    CHECK(run("legendre --n 2 --rep nosuch", true).code == 2);
    CHECK(run("transform /nonexistent/seq.txt", true).code == 2);
    CHECK(run("legendre", true).code == 2);
    CHECK(run("--help").code == 0);
    CHECK(run("verify --help").code == 0);
}
