#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs the installed binary with shell redirection; no argument here ever
// needs quoting.
RunResult run_cli(const std::string& args) {
    static int call = 0;
    std::string base = "/tmp/quartets_cli_" + std::to_string(getpid()) + "_" +
                       std::to_string(call++);
    std::string out_path = base + ".out";
    std::string err_path = base + ".err";
    std::string cmd =
        std::string(QUARTETS_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;

    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));

    RunResult result{WEXITSTATUS(status), slurp(out_path), slurp(err_path)};
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

const std::string kHeader = "m1,n1,m2,n2,m3,n3,m4,n4,q,g1,g2,g3,g4,kind";

}  // namespace

TEST_CASE("all kinds at d=4 prints header plus 39 rows") {
    RunResult r = run_cli("--max 4 --mode all");
    CHECK(r.exit_code == 0);
    CHECK(r.err.empty());

    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 40);
    CHECK(lines[0] == kHeader);
    for (size_t i = 1; i < lines.size(); ++i) {
        long commas = std::count(lines[i].begin(), lines[i].end(), ',');
        CHECK(commas == 13);
    }
}

TEST_CASE("default mode is asymmetric-only") {
    RunResult r = run_cli("--max 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == kHeader + "\n");
}

TEST_CASE("json format parses and mirrors the csv fields") {
    RunResult r = run_cli("--max 4 --mode all --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["config"]["max"] == 4);
    CHECK(j["config"]["mode"] == "all");
    CHECK(j["counts"]["total"] == 39);
    CHECK(j["quartets"].size() == 39);
}

TEST_CASE("--out writes the payload to a file, stdout stays clean") {
    std::string path = "/tmp/quartets_cli_payload_" + std::to_string(getpid()) + ".csv";
    RunResult r = run_cli("--max 4 --mode all --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::vector<std::string> lines = lines_of(slurp(path));
    CHECK(lines.size() == 40);
    CHECK(lines[0] == kHeader);
    std::remove(path.c_str());
}

TEST_CASE("--stats goes to stderr, payload stays on stdout") {
    RunResult r = run_cli("--max 4 --mode all --stats");
    CHECK(r.exit_code == 0);
    CHECK(lines_of(r.out).size() == 40);
    CHECK(r.err.find("quartets: 39") != std::string::npos);
    CHECK(r.err.find("classes touched: 12") != std::string::npos);
}

TEST_CASE("usage errors exit with 1") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("--max 4 --tridents 1:2,1:2").exit_code == 1);
    CHECK(run_cli("--max 0").exit_code == 1);
    CHECK(run_cli("--mode sideways --max 4").exit_code == 1);
    CHECK(run_cli("--format yaml --max 4").exit_code == 1);
    CHECK(run_cli("--oracle-check 65").exit_code == 1);
    CHECK(run_cli("--tridents nonsense").exit_code == 1);
    CHECK(run_cli("--no-such-flag").exit_code == 1);
}

TEST_CASE("oracle check agrees and reports on stderr") {
    RunResult r = run_cli("--oracle-check 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());  // check-only runs have no payload
    CHECK(r.err.find("sets agree") != std::string::npos);
}

TEST_CASE("tridents flag with spec syntax") {
    RunResult r = run_cli("--tridents 2:5,1:4");
    CHECK(r.exit_code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    CHECK(lines[0] == kHeader);
    CHECK(lines.size() > 1);
    for (size_t i = 1; i < lines.size(); ++i)
        CHECK(lines[i].find("asymmetric") != std::string::npos);
}

TEST_CASE("paper filter output is a row subset") {
    RunResult full = run_cli("--max 50 --mode all");
    RunResult filtered = run_cli("--max 50 --mode all --paper-filter");
    CHECK(full.exit_code == 0);
    CHECK(filtered.exit_code == 0);

    std::vector<std::string> full_lines = lines_of(full.out);
    std::set<std::string> full_set(full_lines.begin(), full_lines.end());
    std::vector<std::string> filtered_lines = lines_of(filtered.out);
    CHECK(filtered_lines.size() < full_lines.size());
    for (const std::string& line : filtered_lines) CHECK(full_set.count(line) == 1);
}

TEST_CASE("two identical invocations produce identical bytes") {
    RunResult a = run_cli("--max 60 --mode all");
    RunResult b = run_cli("--max 60 --mode all");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(lines_of(a.out).size() > 1);
}

TEST_CASE("help exits 0") {
    RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("--max") != std::string::npos);
    CHECK(r.out.find("--oracle-check") != std::string::npos);
}
