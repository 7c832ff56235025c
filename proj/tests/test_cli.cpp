#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "zetabound/majorant.hpp"
#include "zetabound/statistics.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string cli_path() {
    const char* p = std::getenv("CLI_PATH");
    REQUIRE(p != nullptr);
    return p;
}

fs::path work_dir() {
    const char* p = std::getenv("WORK_DIR");
    REQUIRE(p != nullptr);
    fs::create_directories(p);
    return p;
}

int run(const std::string& args, const fs::path& log) {
    std::string cmd = cli_path() + " " + args + " > " + log.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// rows of a CSV as vectors of doubles, header skipped
std::vector<std::vector<double>> parse_csv(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

} // namespace

TEST_CASE("lambda0 subcommand round-trips", "[slow]") {
    fs::path out = work_dir() / "l0";
    REQUIRE(run("lambda0 --out " + out.string(), out.string() + ".log") == 0);
    auto rows = parse_csv(out / "lambda0.csv");
    REQUIRE(rows.size() == 1);
    CHECK(rows[0][0] == Catch::Approx(0.4912251835444739).epsilon(1e-12));
    CHECK(std::fabs(rows[0][1]) <= 1e-12);
    json m = json::parse(slurp(out / "lambda0_manifest.json"));
    CHECK(m["config"]["subcommand"] == "lambda0");
    CHECK(m["versions"]["library"].is_string());
    CHECK(m["wall_time_seconds"].is_number());
}

TEST_CASE("validation failures exit 2 and write nothing", "[slow]") {
    fs::path out = work_dir() / "bad";
    fs::remove_all(out);
    fs::path log = work_dir() / "bad.log";
    CHECK(run("scan --t-start 100 --t-end 101 --spacing 0 --out " + out.string(),
              log) == 2);
    CHECK(slurp(log).find("validation") != std::string::npos);
    CHECK_FALSE(fs::exists(out / "scan.csv"));

    CHECK(run("scan --t-start 10 --t-end 11 --spacing 0.1 --out " + out.string(),
              log) == 2); // below the t >= 50 domain
    CHECK_FALSE(fs::exists(out / "scan.csv"));

    CHECK(run("scan --no-such-flag --out " + out.string(), log) == 2);
    CHECK(run("measure --t-start 1e6 --t-end 1000001 --spacing 0.02 "
              "--v-grid 1,2 --out " + out.string(), log) == 2); // V below e
}

TEST_CASE("scan emits stable, self-consistent output", "[slow]") {
    fs::path o1 = work_dir() / "scan1", o3 = work_dir() / "scan3";
    std::string grid = "--t-start 100 --t-end 101 --spacing 0.1 ";
    REQUIRE(run("scan " + grid + "--out " + o1.string(), o1.string() + ".log") == 0);
    REQUIRE(run("scan " + grid + "--threads 3 --out " + o3.string(),
                o3.string() + ".log") == 0);
    CHECK(slurp(o1 / "scan.csv") == slurp(o3 / "scan.csv"));

    auto rows = parse_csv(o1 / "scan.csv");
    REQUIRE(rows.size() == 11);
    CHECK(rows[0][0] == 100.0);
    CHECK(rows[0][1] ==
          Catch::Approx(zetabound::log_abs_zeta(100.0).value).epsilon(1e-15));
    json m = json::parse(slurp(o1 / "scan_manifest.json"));
    CHECK(m["config"]["t_start"] == 100.0);
    CHECK(m["config"]["spacing"] == 0.1);
    CHECK(m["summary"]["samples"] == 11);
}

TEST_CASE("majorant-verify reports margins and no violations", "[slow]") {
    fs::path out = work_dir() / "mv";
    REQUIRE(run("majorant-verify --t-start 1000000 --t-end 1000001 --spacing 0.1 "
                "--x 1000 --out " + out.string(), out.string() + ".log") == 0);
    json m = json::parse(slurp(out / "majorant_verify_manifest.json"));
    CHECK(m["summary"]["violations"] == 0);
    CHECK(m["summary"]["min_margin"].get<double>() > 0.0);
    auto rows = parse_csv(out / "majorant_verify.csv");
    REQUIRE(rows.size() == 11);
    for (auto& r : rows) {
        REQUIRE(r.size() == 4);
        REQUIRE(r[3] == Catch::Approx(r[2] - r[1]).margin(1e-12));
    }
}

TEST_CASE("measure emits the bound table beside the data", "[slow]") {
    fs::path o1 = work_dir() / "me1", o3 = work_dir() / "me3";
    std::string args = "measure --t-start 1000000 --t-end 1000001 --spacing 0.02 "
                       "--v-grid 3,4,5 ";
    REQUIRE(run(args + "--out " + o1.string(), o1.string() + ".log") == 0);
    REQUIRE(run(args + "--threads 2 --out " + o3.string(), o3.string() + ".log") == 0);
    CHECK(slurp(o1 / "measure.csv") == slurp(o3 / "measure.csv"));
    auto rows = parse_csv(o1 / "measure.csv");
    REQUIRE(rows.size() == 3);
    for (auto& r : rows) {
        zetabound::TheoremBound tb = zetabound::theorem_bound(1e6, r[0]);
        REQUIRE(r[2] == Catch::Approx(tb.value).epsilon(1e-15));
        REQUIRE(r[3] == tb.regime);
    }
    json m = json::parse(slurp(o1 / "measure_manifest.json"));
    CHECK(m["summary"]["regime1_empty"] == true);
}

TEST_CASE("moments closes the measure identity on a real window", "[slow]") {
    fs::path out = work_dir() / "mo";
    REQUIRE(run("moments --t-start 1000000 --t-end 1000010 --spacing 0.01 "
                "--k 0.5,1,2 --out " + out.string(), out.string() + ".log") == 0);
    auto rows = parse_csv(out / "moments.csv");
    REQUIRE(rows.size() == 3);
    for (auto& r : rows) REQUIRE(r[3] < 0.02); // rel_diff column
}

TEST_CASE("lemma1-check runs against the zero fixture", "[slow]") {
    const char* zeros = std::getenv("ZEROS_FIXTURE");
    REQUIRE(zeros != nullptr);
    fs::path out = work_dir() / "l1";
    REQUIRE(run(std::string("lemma1-check --T 30 --x 100 --zeros ") + zeros +
                " --out " + out.string(), out.string() + ".log") == 0);
    auto rows = parse_csv(out / "lemma1_check.csv");
    REQUIRE(rows.size() == 1);
    // residual within twice the tail estimate
    CHECK(rows[0][3] <= 2.0 * rows[0][4]);
}

TEST_CASE("lemma3-check draws are seeded and thread-invariant", "[slow]") {
    fs::path o1 = work_dir() / "l3a", o3 = work_dir() / "l3b";
    std::string args = "lemma3-check --x 13 --k 2 --T 10000 --seed 7 ";
    REQUIRE(run(args + "--out " + o1.string(), o1.string() + ".log") == 0);
    REQUIRE(run(args + "--threads 3 --out " + o3.string(), o3.string() + ".log") == 0);
    CHECK(slurp(o1 / "lemma3_check.csv") == slurp(o3 / "lemma3_check.csv"));
    auto rows = parse_csv(o1 / "lemma3_check.csv");
    REQUIRE(rows.size() == 20);
    for (auto& r : rows) {
        REQUIRE(r[6] > 0.1);
        REQUIRE(r[6] < 10.0);
    }
}
