// End-to-end tests that drive the installed `sturm` binary through a shell,
// checking flag plumbing, output formats, and exit codes. Math correctness
// lives in the per-module suites; here we only cross-check CLI output against
// direct library calls.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sturmian/factor.hpp"
#include "sturmian/gram.hpp"
#include "sturmian/slope.hpp"

using namespace sturmian;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_file(const std::string& tag) {
    static int counter = 0;
    return fs::temp_directory_path() /
           ("sturm_cli_" + tag + "_" + std::to_string(++counter) + ".tmp");
}

RunResult run_cli(const std::string& args) {
    const fs::path err_path = scratch_file("stderr");
    const std::string cmd = std::string(STURM_BIN) + " " + args + " 2>" + err_path.string();
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    const int rc = pclose(pipe);
    REQUIRE(WIFEXITED(rc));
    result.status = WEXITSTATUS(rc);
    result.err = slurp(err_path);
    fs::remove(err_path);
    return result;
}

std::string word_string(const Slope& slope, std::int64_t length) {
    std::string bits;
    for (std::uint8_t b : char_prefix(slope, length)) bits += static_cast<char>('0' + b);
    return bits;
}

}  // namespace

TEST_CASE("word prints the characteristic prefix") {
    const RunResult r = run_cli("word --slope golden --length 21");
    CHECK(r.status == 0);
    CHECK(r.out == word_string(Slope::parse("golden"), 21) + "\n");
    CHECK(r.err.empty());

    const RunResult r8 = run_cli("word --slope quad:-1,1,2,5 --length 8");
    CHECK(r8.out == "10110101\n");
}

TEST_CASE("word emits json and csv variants") {
    const RunResult j = run_cli("word --slope golden --length 8 --format json");
    CHECK(j.status == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["length"] == 8);
    CHECK(parsed["word"] == "10110101");
    CHECK(parsed["slope"] == "quad:-1,1,2,5");

    const RunResult c = run_cli("word --slope golden --length 3 --format csv");
    CHECK(c.status == 0);
    CHECK(c.out == "i,c\n0,1\n1,0\n2,1\n");
}

TEST_CASE("guarded rational beyond its guard exits with code 3") {
    for (const std::string spec : {"rat:1/2:2", "rat:1/2"}) {
        const RunResult r = run_cli("word --slope " + spec + " --length 5");
        CHECK(r.status == 3);
        CHECK(r.err.find("guard violation") != std::string::npos);
    }
    // Same guard, query inside it: fine.
    const RunResult ok = run_cli("parity --slope rat:5/13 --nmax 12");
    CHECK(ok.status == 0);
    CHECK(ok.out == "12/12 pass\n");
    const RunResult bad = run_cli("parity --slope rat:5/13 --nmax 13");
    CHECK(bad.status == 3);
}

TEST_CASE("parity reports a pass count over the requested range") {
    const RunResult r = run_cli("parity --slope invsqrt3 --nmax 100");
    CHECK(r.status == 0);
    CHECK(r.out == "100/100 pass\n");

    const RunResult j = run_cli("parity --slope golden --nmax 40 --format json");
    CHECK(j.status == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["pass"] == 40);
    CHECK(parsed["fail"].empty());
}

TEST_CASE("bseq csv rows carry value, case, and predicted parity") {
    const RunResult r = run_cli("bseq --slope rat:2/7 --kmax 6 --format csv");
    CHECK(r.status == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "k,B,case,parity_predicted");
    const std::vector<std::string> expected_b = {"0", "1", "2", "0", "2", "4"};
    for (int k = 1; k <= 6; ++k) {
        REQUIRE(std::getline(lines, line));
        std::istringstream cells(line);
        std::string kk, bb, cls, par;
        std::getline(cells, kk, ',');
        std::getline(cells, bb, ',');
        std::getline(cells, cls, ',');
        std::getline(cells, par, ',');
        CHECK(kk == std::to_string(k));
        CHECK(bb == expected_b[static_cast<std::size_t>(k - 1)]);
        CHECK((cls == "LOW" || cls == "MID" || cls == "HIGH" || cls == "NA"));
        CHECK(par == std::to_string((bb.back() - '0') % 2));
    }
}

TEST_CASE("bseq --check cross-validates and reports agreement") {
    const RunResult r = run_cli("bseq --slope golden --kmax 200 --check");
    CHECK(r.status == 0);
    CHECK(r.out.find("check: direct = recurrence = parity prediction") != std::string::npos);
}

TEST_CASE("gram prints the eigenvalue multiplicity") {
    const std::int64_t expected =
        eigen_multiplicity(gram_matrix(factor_set(Slope::parse("golden"), 5)), 1);
    const RunResult r = run_cli("gram --slope golden -n 5 --lambda 1");
    CHECK(r.status == 0);
    CHECK(r.out == std::to_string(expected) + "\n");

    const RunResult neg = run_cli("gram --slope golden -n 5 --lambda=-3");
    CHECK(neg.status == 0);
    CHECK(neg.out == "0\n");

    const RunResult csv = run_cli("gram --slope golden -n 5 --lambda 1 --format csv");
    CHECK(csv.out == "n,lambda,multiplicity\n5,1," + std::to_string(expected) + "\n");
}

TEST_CASE("sweep-m csv contains the published anchor rows") {
    const RunResult r = run_cli("sweep-m --slope golden --nmax 70 --format csv");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("n,m\n1,1\n", 0) == 0);
    CHECK(r.out.find("\n55,13\n") != std::string::npos);
    CHECK(r.out.find("\n65,0\n") != std::string::npos);
}

TEST_CASE("sweep-m output is byte-identical across job counts") {
    const fs::path f1 = scratch_file("sweep1");
    const fs::path f2 = scratch_file("sweep2");
    const RunResult r1 =
        run_cli("sweep-m --slope quad:3,-1,2,5 --nmax 30 --jobs 1 --out " + f1.string());
    const RunResult r2 =
        run_cli("sweep-m --slope quad:3,-1,2,5 --nmax 30 --jobs 2 --out " + f2.string());
    CHECK(r1.status == 0);
    CHECK(r2.status == 0);
    CHECK(slurp(f1) == slurp(f2));
    fs::remove(f1);
    fs::remove(f2);
}

TEST_CASE("sweep-m json parses with slope and value pairs") {
    const RunResult r = run_cli("sweep-m --slope golden --nmax 5 --format json");
    CHECK(r.status == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["lambda"] == 1);
    REQUIRE(parsed["values"].size() == 5);
    CHECK(parsed["values"][0][0] == 1);
    CHECK(parsed["values"][0][1] == 1);
}

TEST_CASE("atlas lists every order-n interval with its factor set") {
    const RunResult r = run_cli("atlas -n 3 --format json");
    CHECK(r.status == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    REQUIRE(parsed.size() == 4);
    CHECK(parsed[0]["lo"] == "0/1");
    CHECK(parsed[0]["hi"] == "1/3");
    CHECK(parsed[0]["rep"] == "1/4");
    CHECK(parsed[3]["rep"] == "3/4");
    for (const auto& item : parsed) REQUIRE(item["factors"].size() == 4);

    const RunResult count = run_cli("atlas -n 12 --count");
    CHECK(count.status == 0);
    CHECK(count.out == "46\n");
}

TEST_CASE("verify --quick passes and reports per-check counts") {
    const RunResult r = run_cli("verify --quick --seed 7");
    CHECK(r.status == 0);
    CHECK(r.out.find("result: PASS") != std::string::npos);
    CHECK(r.out.find("counterexamples") == std::string::npos);

    const RunResult j = run_cli("verify --quick --seed 7 --format json");
    CHECK(j.status == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["ok"] == true);
    CHECK(parsed["failures"].empty());
    CHECK(parsed["checks"].size() > 10);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").status == 2);                          // missing subcommand
    CHECK(run_cli("word --bogus 3").status == 2);            // unknown flag
    CHECK(run_cli("word --length 0").status == 2);           // rejected by validator
    CHECK(run_cli("word --format yaml").status == 2);        // unknown format
    const RunResult bad_slope = run_cli("word --slope rat:0/5 --length 3");
    CHECK(bad_slope.status == 2);
    CHECK(bad_slope.err.find("error:") != std::string::npos);
    CHECK(run_cli("--help").status == 0);
}

TEST_CASE("--out writes the payload to a file without decoration") {
    const fs::path path = scratch_file("word");
    const RunResult r = run_cli("word --slope golden --length 13 --out " + path.string());
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path) == word_string(Slope::parse("golden"), 13));
    fs::remove(path);
}
