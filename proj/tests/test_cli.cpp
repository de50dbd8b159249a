#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string binary() {
    const char* p = std::getenv("CVNET_BIN");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const fs::path tmp = fs::temp_directory_path() / "cvnet_cli_out.txt";
    const std::string cmd = binary() + " " + args + " > " + tmp.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(raw), ss.str()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

std::string zero_assignment(int sources) {
    json src = json::array();
    for (int i = 0; i < sources; ++i)
        src.push_back(json{{"a0", {0, 0}}, {"a1", {0, 0}}, {"b0", {0, 0}}, {"b1", {0, 0}}});
    return json{{"sources", src}}.dump();
}

} // namespace

TEST_CASE("eval round trip") {
    const fs::path a = write_temp("cvnet_zero2.json", zero_assignment(2));
    const RunResult r = run("eval --family chain --y 3 --source epr:r=0 --assignment "
                            + a.string() + " --s -1");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["B"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(j["I"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(j["J"].get<double>() == doctest::Approx(0.0));
    CHECK(j["k"].get<int>() == 2);
}

TEST_CASE("exit codes") {
    const fs::path a = write_temp("cvnet_zero2.json", zero_assignment(2));
    CHECK(run("eval --family blorp --y 3 --source epr:r=0 --assignment " + a.string()
              + " --s -1").exit_code == 2);
    const fs::path bad = write_temp("cvnet_bad.json", "{not json");
    CHECK(run("eval --family chain --y 3 --source epr:r=0 --assignment " + bad.string()
              + " --s -1").exit_code == 2);
    CHECK(run("eval --family chain --y 3 --source epr:r=0 --assignment /nonexistent.json"
              " --s -1").exit_code == 4);
    CHECK(run("eval --family chain --y 3 --source epr:r=0 --assignment " + a.string()
              + " --s 0.5").exit_code == 3);
    // Wrong assignment length for the topology.
    CHECK(run("eval --family star --y 4 --source epr:r=0 --assignment " + a.string()
              + " --s -1").exit_code == 2);
    // Missing required option is a parse error.
    CHECK(run("eval --family chain --y 3 --assignment " + a.string()).exit_code == 2);
}

TEST_CASE("sup csv and determinism") {
    const std::string common =
        "sup --family chain --y 3 --source epr:r=0.5 --s -1 "
        "--restarts 8 --budget 1500 --seed 7 --threads 1";
    const RunResult r1 = run(common);
    const RunResult r2 = run(common);
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    std::istringstream lines(r1.out);
    std::string header, row;
    REQUIRE(std::getline(lines, header));
    REQUIRE(std::getline(lines, row));
    CHECK(header == "family,params,s,r1,r2,B,I,J,k,restarts,evals,boundary_hit,seed");
    CHECK(row.rfind("chain,y=3,-1,0.5,0.5,", 0) == 0);
}

TEST_CASE("saved argmax reproduces the supremum") {
    const fs::path arg = fs::temp_directory_path() / "cvnet_argmax.json";
    const RunResult r = run("sup --family chain --y 3 --source epr:r=0.5 --s -1 "
                            "--restarts 12 --budget 3000 --seed 9 --threads 1 "
                            "--save-argmax " + arg.string());
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    // B is the sixth CSV column.
    std::istringstream cells(row);
    std::string cell;
    for (int i = 0; i < 6; ++i) std::getline(cells, cell, ',');
    const double b_reported = std::stod(cell);

    const RunResult re = run("eval --family chain --y 3 --source epr:r=0.5 "
                             "--assignment " + arg.string() + " --s -1");
    REQUIRE(re.exit_code == 0);
    const double b_again = json::parse(re.out)["B"].get<double>();
    CHECK(b_again == doctest::Approx(b_reported).epsilon(1e-9));
    CHECK(b_again > 1.0);
}

TEST_CASE("sweep grid output") {
    const RunResult r = run("sweep --family chain --y 3 --source epr "
                            "--s -1 --r 0.3,0.6 --restarts 6 --budget 1000 "
                            "--seed 3 --threads 1");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0;
    std::getline(lines, line);  // header
    CHECK(line == "family,params,s,r1,r2,B,I,J,k,restarts,evals,boundary_hit,seed");
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2);
}

TEST_CASE("reproduce writes grids and a manifest") {
    const fs::path dir = fs::temp_directory_path() / "cvnet_fig5";
    fs::remove_all(dir);
    const RunResult r = run("reproduce --figure fig5 --outdir " + dir.string()
                            + " --restarts 1 --budget 120");
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(dir / "fig5_upper_branch.csv"));
    CHECK(fs::exists(dir / "fig5_lower_branch.csv"));
    REQUIRE(fs::exists(dir / "fig5_manifest.json"));
    std::ifstream mf(dir / "fig5_manifest.json");
    const json manifest = json::parse(mf);
    CHECK(manifest.contains("outputs"));
    CHECK(manifest["outputs"].size() >= 2);
}

TEST_CASE("validation suites pass") {
    const RunResult r = run("validate --samples 40");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all suites passed") != std::string::npos);
    CHECK(r.out.find("FAIL ") == std::string::npos);
}
