#include "doctest.h"

#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Subprocess harness: the CLI path arrives via QBOSON_CLI (set by ctest).

namespace {

std::string cli_path() {
    const char* p = std::getenv("QBOSON_CLI");
    REQUIRE_MESSAGE(p != nullptr, "QBOSON_CLI must point at the CLI binary");
    return p;
}

std::string corpus_dir() {
    const char* p = std::getenv("QBOSON_CORPUS_DIR");
    REQUIRE_MESSAGE(p != nullptr, "QBOSON_CORPUS_DIR must be set");
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run(const std::string& args) {
    std::string out_path = "cli_stdout.txt", err_path = "cli_stderr.txt";
    std::string cmd =
        cli_path() + " " + args + " > " + out_path + " 2> " + err_path;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

using nlohmann::json;

}  // namespace

TEST_CASE("build: 2-dim HP matrices in graded order") {
    RunResult r = run("build --n 1 --p 1 --trunc 1 --kind hp --backend numeric --q 0.8");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["basis"] == json::parse("[[0],[1]]"));
    CHECK(doc["meta"]["kind"] == "hp");
    // e_1 = [[0,1],[0,0]]: single entry in column 1, row 0, value 1
    auto& e1 = doc["operators"]["e1"]["cols"];
    REQUIRE(e1.size() == 1);
    auto& entry = e1["1"][0];
    CHECK(entry[0] == 0);
    CHECK(entry[1]["numeric"]["re"].get<std::string>().substr(0, 4) == "1.00");
    CHECK(doc["operators"]["f1"]["cols"]["0"][0][0] == 1);
}

TEST_CASE("build: exact Dyson emits Laurent entries") {
    RunResult r = run("build --n 2 --p 2 --trunc 2 --kind dyson --backend exact");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["meta"]["backend"] == "exact-laurent");
    bool saw_laurent = false;
    for (auto& [label, op] : doc["operators"].items())
        for (auto& [j, col] : op["cols"].items())
            for (auto& e : col)
                saw_laurent = saw_laurent || e[1].contains("laurent");
    CHECK(saw_laurent);
}

TEST_CASE("config errors exit 2") {
    CHECK(run("build --backend exact --p 2.5 --kind dyson").exit_code == 2);
    RunResult r = run("build --backend exact --p 2.5 --kind dyson");
    CHECK(r.err.find("integer p") != std::string::npos);
    CHECK(run("verify --n 1 --p 1 --trunc 2 --backend numeric").exit_code == 2);
    CHECK(run("verify --n 1 --p 1 --trunc 2 --backend numeric --q -0.5").exit_code == 2);
    CHECK(run("verify --n 1 --p 1 --trunc 2 --backend numeric --q 1").exit_code == 2);
    CHECK(run("limit --n 1 --p 1 --trunc 2 --kind hp --backend numeric --q 0.8").exit_code == 2);
    CHECK(run("build --n 1 --p 1 --trunc 2 --format matrixmarket --backend exact --kind dyson").exit_code == 2);
    CHECK(run("analyze --n 1 --p 1 --trunc 3 --backend exact --kind dyson").exit_code == 2);
}

TEST_CASE("build errors exit 3") {
    // HP images need radicals; the plain Laurent ring cannot hold them
    CHECK(run("build --n 1 --p 1 --trunc 2 --kind hp --backend exact-laurent").exit_code == 3);
}

TEST_CASE("verify: standard suites pass, corrupted corpus fails") {
    CHECK(run("verify --n 2 --p 3 --trunc 5 --kind dyson --backend exact").exit_code == 0);

    RunResult hp = run("verify --n 2 --p 3 --trunc 5 --kind hp --backend numeric --q 0.7");
    CHECK(hp.exit_code == 0);
    json doc = json::parse(hp.out);
    CHECK(doc["report"]["all_passed"] == true);
    for (auto& rel : doc["report"]["relations"]) {
        REQUIRE(rel.contains("residual"));
        CHECK(rel["verdict"] == "sampled-pass");
    }

    std::ofstream("bad_corpus.rel") << "# missing the qbracket term\n[e1, f1] = 0\n";
    RunResult bad = run("verify --n 1 --p 2 --trunc 4 --kind dyson --backend exact --corpus bad_corpus.rel");
    CHECK(bad.exit_code == 1);
    json bdoc = json::parse(bad.out);
    CHECK(bdoc["report"]["all_passed"] == false);
    CHECK(bdoc["report"]["relations"][0].contains("witness"));
}

TEST_CASE("verify: shipped corpus files load") {
    RunResult r = run("verify --n 3 --p 2 --trunc 4 --kind dyson --backend exact --corpus " +
                      corpus_dir() + "/sl4-standard.rel");
    CHECK(r.exit_code == 0);
}

TEST_CASE("analyze: invariance and unitarity claims") {
    CHECK(run("analyze --kind hp --n 2 --p 1 --trunc 3 --backend numeric --q 0.8 "
              "--invariance --unitarity").exit_code == 0);

    RunResult dy = run("analyze --kind dyson --n 1 --p 2 --trunc 5 --backend exact --invariance");
    CHECK(dy.exit_code == 0);
    json doc = json::parse(dy.out);
    CHECK(doc["invariance_claim_holds"] == true);
    bool f0_witness = false;
    for (auto& sub : doc["invariance"])
        if (sub["subspace"] == "F0")
            for (auto& g : sub["generators"])
                if (g["generator"] == "f1") {
                    CHECK(g["invariant"] == false);
                    f0_witness = g.contains("witness");
                }
    CHECK(f0_witness);

    // Dyson unitarity runs in expect-fail mode and must find the deviation
    CHECK(run("analyze --kind dyson --n 1 --p 2 --trunc 4 --backend numeric --q 0.8 "
              "--unitarity").exit_code == 0);

    RunResult probe = run("analyze --kind hp --n 1 --p 2.5 --trunc 8 --backend numeric "
                          "--q 0.9 --irreducibility-probe");
    CHECK(probe.exit_code == 0);
    CHECK(json::parse(probe.out)["irreducibility_probe"]["coefficients_checked"] == 9);
}

TEST_CASE("limit: classical comparison") {
    CHECK(run("limit --kind dyson --n 2 --p 2 --trunc 4 --backend exact").exit_code == 0);
    CHECK(run("limit --kind hp --n 1 --p 1 --trunc 1 --backend exact").exit_code == 0);
}

TEST_CASE("matrix-market export for numeric builds") {
    RunResult r = run("build --n 1 --p 2 --trunc 2 --kind dyson --backend numeric "
                      "--q 0.8 --format matrixmarket --output mm_test");
    REQUIRE(r.exit_code == 0);
    std::string e1 = slurp("mm_test.e1.mtx");
    CHECK(e1.rfind("%%MatrixMarket matrix coordinate real general\n", 0) == 0);
    CHECK(e1.find("3 3 2\n") != std::string::npos);  // 3-dim space, 2 entries
}

TEST_CASE("determinism: identical configs give byte-identical reports") {
    std::string args =
        "verify --n 2 --p 2 --trunc 4 --kind hp --backend numeric --q 0.7 --seed 7";
    RunResult a = run(args + " --output det_a.json");
    RunResult b = run(args + " --output det_b.json");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    std::string da = slurp("det_a.json"), db = slurp("det_b.json");
    CHECK(!da.empty());
    CHECK(da == db);
}
