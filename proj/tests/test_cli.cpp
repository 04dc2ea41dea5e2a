// Drives the installed binary end to end through popen.  The binary path
// arrives as the first command-line argument (wired up by CTest); remaining
// arguments fall through to the test framework.
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "betti/enumerate.hpp"
#include "betti/io.hpp"

#include "json.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

std::string g_cli_path;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs `betti <args>` through the shell, capturing stdout; stderr is merged
// in when `merge_stderr` is set and discarded otherwise.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd =
        "'" + g_cli_path + "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string temp_path(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path();
    return (dir / ("betti-cli-" + std::to_string(getpid()) + "-" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = temp_path(name);
    std::ofstream out(path, std::ios::binary);
    out << content;
    REQUIRE(out.good());
    return path;
}

betti::BettiDiagram m_prime() {
    betti::BettiDiagram B;
    B.set(0, 0, betti::Rat(1));
    B.set(1, 2, betti::Rat(4));
    B.set(2, 3, betti::Rat(2));
    B.set(2, 4, betti::Rat(3));
    B.set(3, 5, betti::Rat(2));
    return B;
}

}  // namespace

TEST_CASE("pi values") {
    RunResult r = run_cli("pi --degrees 0,2,4,5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 10/3 5 8/3\n");

    r = run_cli("pi --degrees 0,2,3,5 --index 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "5\n");

    r = run_cli("pi --degrees 0,2,4,5 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"pi\":[\"1\",\"10/3\",\"5\",\"8/3\"],\"reg\":2,\"sum\":\"12\"}\n");

    // Identical invocations are byte-identical.
    CHECK(run_cli("pi --degrees 0,2,4,5 --json").out == r.out);
}

TEST_CASE("pi input errors exit with 2") {
    CHECK(run_cli("pi --degrees 0,2,2,5").exit_code == 2);
    CHECK(run_cli("pi --degrees 1,2,3").exit_code == 2);
    CHECK(run_cli("pi --degrees 0,2,x").exit_code == 2);
    CHECK(run_cli("pi").exit_code == 2);  // --degrees is required
    RunResult r = run_cli("pi --degrees 0,2,2,5", /*merge_stderr=*/true);
    CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("decompose the running example") {
    const std::string input =
        write_temp("mprime.json", betti::diagram_to_json(m_prime(), 3));

    RunResult r = run_cli("decompose --input '" + input + "' --check --codim 3");
    CHECK(r.exit_code == 0);
    const betti::Decomposition dec = betti::decomposition_from_json(r.out);
    CHECK(dec.source_beta0 == betti::Rat(1));
    REQUIRE(dec.summands.size() == 2);
    CHECK(dec.summands[0].lambda == betti::Rat(2, 5));
    CHECK(dec.summands[0].degrees == betti::DegreeSequence({0, 2, 3, 5}));
    CHECK(dec.summands[1].lambda == betti::Rat(3, 5));
    CHECK(dec.summands[1].degrees == betti::DegreeSequence({0, 2, 4, 5}));

    // --check reports on stderr only; stdout stays machine-readable.
    RunResult merged = run_cli("decompose --input '" + input + "' --check", true);
    CHECK(merged.exit_code == 0);
    CHECK(merged.out.find("check: recomposition reproduces the input exactly") !=
          std::string::npos);

    // --output writes the same payload to a file.
    const std::string outfile = temp_path("mprime-out.json");
    RunResult wrote = run_cli("decompose --input '" + input + "' --output '" + outfile + "'");
    CHECK(wrote.exit_code == 0);
    std::ifstream in(outfile, std::ios::binary);
    std::string payload((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(payload == r.out);
}

TEST_CASE("decompose --rows prints the twist-row table first") {
    const std::string input = write_temp("rows.json", betti::diagram_to_json(m_prime()));
    RunResult r = run_cli("decompose --rows --input '" + input + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("    0  1  2  3\n"
                      "0:  1  .  .  .\n"
                      "1:  .  4  2  .\n"
                      "2:  .  .  3  2\n",
                      0) == 0);
}

TEST_CASE("decompose rejects non-members with exit 1 and keeps the residual") {
    betti::BettiDiagram bad;
    bad.set(0, 0, betti::Rat(1));
    bad.set(1, 1, betti::Rat(1));
    bad.set(2, 1, betti::Rat(1));
    const std::string input = write_temp("bad.json", betti::diagram_to_json(bad));

    RunResult r = run_cli("decompose --input '" + input + "'", /*merge_stderr=*/true);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("error: not_in_cone at column 2") != std::string::npos);
    CHECK(r.out.find("partial decomposition written (0 summand(s), residual has 3 entries)") !=
          std::string::npos);
}

TEST_CASE("decompose usage errors exit with 2") {
    CHECK(run_cli("decompose --input /nonexistent/diagram.json").exit_code == 2);
    const std::string garbage = write_temp("garbage.json", "not json");
    CHECK(run_cli("decompose --input '" + garbage + "'").exit_code == 2);
}

TEST_CASE("bounds eval") {
    RunResult r = run_cli("bounds eval --a 2 --b 0 --e 1 --n 7 --i 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");

    r = run_cli("bounds eval --a 3 --b 1 --e 1 --n 4 --i 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "7/3 (2.33)\n");

    CHECK(run_cli("bounds eval --a 1 --b 0 --e 0 --n 3 --i 1").exit_code == 2);  // a < 2
    CHECK(run_cli("bounds eval --a 2 --b 0 --e 0 --n 3").exit_code == 2);        // --i required
}

TEST_CASE("bounds table") {
    RunResult r = run_cli("bounds table");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("G(1,0,3) = 21/10 (2.1) OK\n") != std::string::npos);
    CHECK(r.out.find("F(2,0,1,7,2) = 2 OK\n") != std::string::npos);
    CHECK(r.out.find("G(1,1,2) = 7/4 (1.75) below 2 (informational)\n") != std::string::npos);
    CHECK(r.out.find("VIOLATION") == std::string::npos);
}

TEST_CASE("bounds lemmas") {
    RunResult r = run_cli("bounds lemmas");
    CHECK(r.exit_code == 0);
    for (const char* name : {"Fa", "Fn", "Fbe0", "Gi", "Gbe2", "G1e", "G1n9"})
        CHECK(r.out.find("(" + std::string(name) + ") ") != std::string::npos);
    CHECK(r.out.find(" OK\n") != std::string::npos);
    CHECK(r.out.find("violation") == std::string::npos);

    r = run_cli("bounds lemmas --lemma G1n9");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(G1n9) 48 points OK\n") != std::string::npos);

    // Dropping the hypothesis filter exposes the two short-shape corners.
    r = run_cli("bounds lemmas --lemma Gbe2 --unfiltered");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("violation(s)") != std::string::npos);
    CHECK(r.out.find("(a=0, b=1, e=1, n=0, i=2): 7/4 vs 2") != std::string::npos);

    CHECK(run_cli("bounds lemmas --lemma Nope").exit_code == 2);
}

TEST_CASE("bounds sharpness") {
    RunResult r = run_cli("bounds sharpness");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "7/5 > 63/50\n");
}

TEST_CASE("verify total on a small block") {
    betti::EnumSpec spec;
    spec.n_lo = spec.n_hi = 3;
    spec.max_d1 = 4;
    const long expected = static_cast<long>(betti::enumerate_all(spec).size());

    RunResult r = run_cli("verify total --n 3 --max-d1 4 --json");
    CHECK(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("checked").get<long>() == expected);
    CHECK(doc.at("violations").empty());
    CHECK(doc.at("excluded").empty());

    // Worker count must not affect the bytes.
    CHECK(run_cli("verify total --n 3 --max-d1 4 --workers 3 --json").out == r.out);

    RunResult text = run_cli("verify total --n 3 --max-d1 4");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("total bound: " + std::to_string(expected) + " sequences checked") == 0);
    CHECK(text.out.find("0 violation(s)") != std::string::npos);
}

TEST_CASE("verify total negative control") {
    RunResult r = run_cli("verify total --n 3 --min-d1 1 --max-d1 1");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("1 violation(s)") != std::string::npos);
    CHECK(r.out.find("D={0,1,2,3}: 8 < 12") != std::string::npos);
}

TEST_CASE("verify half exposes the exclusions") {
    RunResult r = run_cli("verify half --n 6 --max-d1 3 --json");
    CHECK(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("violations").empty());
    CHECK(doc.at("excluded").size() == 10);  // both n = 6 families

    // The half bound needs n >= 6: below that is a usage error.
    CHECK(run_cli("verify half --n 3..5").exit_code == 2);
}

TEST_CASE("verify erman on a small block") {
    RunResult r = run_cli("verify erman --n 3..4 --max-d1 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("binomial bound:") == 0);
    CHECK(r.out.find("0 violation(s)") != std::string::npos);
}

TEST_CASE("verify special-cases") {
    RunResult r = run_cli("verify special-cases");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("36 sequences, 36 satisfy total bound\n", 0) == 0);
    CHECK(r.out.find("n=6 d1=2: 5 sequence(s)") != std::string::npos);
    CHECK(r.out.find("n=8 d1=3: 7 sequence(s)") != std::string::npos);
    CHECK(r.out.find("doubled-bound misses inside the excluded families (expected):") !=
          std::string::npos);
    CHECK(r.out.find("D={0,2,3,5,6,7,8} i=2: 28 < 30") != std::string::npos);

    RunResult json = run_cli("verify special-cases --json");
    CHECK(json.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(json.out);
    CHECK(doc.at("checked").get<long>() == 36);
    CHECK(doc.at("violations").empty());
}

TEST_CASE("certify") {
    RunResult r = run_cli("certify --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("certificate for n = 3: sum of pi >= 12\n", 0) == 0);
    CHECK(r.out.find("[ok] clear-denominators:") != std::string::npos);
    CHECK(r.out.find("[ok] substitute-min-a:") != std::string::npos);
    CHECK(r.out.find("[ok] rewriting-identity:") != std::string::npos);
    CHECK(r.out.find("[ok] branch-nonnegativity:") != std::string::npos);
    CHECK(r.out.find("note: transcription") != std::string::npos);
    CHECK(r.out.find("NOT certified") == std::string::npos);
    CHECK(r.out.find("certified\n") != std::string::npos);

    RunResult json = run_cli("certify --n 3 --json");
    CHECK(json.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(json.out);
    CHECK(doc.at("certified").get<bool>());
    CHECK(doc.at("steps").size() == 4);
    CHECK(doc.at("reduced").get<std::string>() ==
          "a^2 + a*x + a*y - 5*x*y + 2*a - 5*x - 5*y - 5");
    CHECK(doc.at("substituted").get<std::string>() == "2*x^2 - x*y + 2*y^2 - 2");

    // Unsupported lengths are usage errors, not failures.
    RunResult bad = run_cli("certify --n 6", /*merge_stderr=*/true);
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("no certificate available for n = 6") != std::string::npos);
    CHECK(run_cli("certify").exit_code == 2);
}

TEST_CASE("global usage errors") {
    CHECK(run_cli("").exit_code == 2);           // a subcommand is required
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("pi --degrees 0,2,3,5 --bogus").exit_code == 2);
    CHECK(run_cli("bounds").exit_code == 2);     // bounds needs its own subcommand
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("pi --help").exit_code == 0);
}

int main(int argc, char** argv) {
    if (argc < 2 || argv[1][0] == '-') {
        std::cerr << "usage: test_cli <path-to-betti-binary> [test options]\n";
        return 64;
    }
    g_cli_path = argv[1];
    doctest::Context context(argc - 1, argv + 1);
    return context.run();
}
